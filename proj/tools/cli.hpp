#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqdiff/sqdiff.hpp"

namespace sqdiff::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kCapacity = 2, kUsage = 64 };

inline std::string fmt_double(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string fmt_fixed(double v, int decimals = 9) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

/// Parses "j/M" exactly, or a decimal.
struct ThetaArg {
  std::optional<analytic::GridAngle> grid;
  long double value = 0;
};

inline ThetaArg parse_theta(const std::string& text) {
  ThetaArg out;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    analytic::GridAngle g;
    const auto* b = text.data();
    auto r1 = std::from_chars(b, b + slash, g.j);
    auto r2 = std::from_chars(b + slash + 1, b + text.size(), g.M);
    if (r1.ec != std::errc{} || r1.ptr != b + slash || r2.ec != std::errc{} ||
        r2.ptr != b + text.size() || g.M == 0)
      throw ParseError("bad rational angle '" + text + "'");
    out.grid = g;
    out.value = g.value();
    return out;
  }
  std::size_t used = 0;
  try {
    out.value = std::stold(text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad angle '" + text + "'");
  }
  if (used != text.size()) throw ParseError("bad angle '" + text + "'");
  return out;
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Colourings of [1, N] without monochromatic x - y = z^2", "sqdiff"};
    app.require_subcommand(1);
    app.add_option("--format", format_, "Report format")->check(CLI::IsMember({"text", "json-lines"}));
    app.add_option("--seed", seed_, "Seed for randomized steps (none are randomized today)");
    app.add_option("--threads", threads_, "Worker threads; results never depend on it");

    std::vector<std::function<int()>> actions;
    auto* construct = app.add_subcommand("construct", "Emit the doubly exponential colouring for k colours");
    unsigned k_construct = 0;
    std::string out_path;
    construct->add_option("--k", k_construct)->required();
    construct->add_option("--out", out_path, "Write to this file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Check a colouring for monochromatic solutions");
    std::string colouring_path;
    verify->add_option("--colouring", colouring_path, "Colouring file ('-' or absent: stdin)");

    auto* search = app.add_subcommand("search", "Decide k-colourability of [1, n], or compute S(k)");
    std::size_t k_search = 0;
    std::optional<std::uint64_t> n_search;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_seconds;
    std::string cnf_path;
    bool no_symmetry = false;
    search->add_option("--k", k_search)->required();
    search->add_option("--n", n_search);
    search->add_option("--budget-nodes", budget_nodes);
    search->add_option("--budget-seconds", budget_seconds);
    search->add_option("--emit-cnf", cnf_path, "Also write the DIMACS encoding (needs --n)");
    search->add_flag("--no-symmetry-breaking", no_symmetry);

    auto* compute_s = app.add_subcommand("compute-s", "Exact S(k) or a certified lower bound");
    std::size_t k_s = 0;
    compute_s->add_option("--k", k_s)->required();
    compute_s->add_option("--budget-nodes", budget_nodes);
    compute_s->add_option("--budget-seconds", budget_seconds);

    auto* encode = app.add_subcommand("encode-cnf", "DIMACS CNF for k-colouring [1, n]");
    std::size_t k_cnf = 0;
    std::uint64_t n_cnf = 0;
    bool amo = false;
    encode->add_option("--k", k_cnf)->required();
    encode->add_option("--n", n_cnf)->required();
    encode->add_flag("--at-most-one", amo, "Add pairwise at-most-one-colour clauses");
    encode->add_option("--out", out_path);

    auto* count = app.add_subcommand("count", "Monochromatic solutions per colour class");
    count->add_option("--colouring", colouring_path);

    std::string set_path;
    std::uint64_t r = 1, L = 0, Z = 0;
    auto* sqd = app.add_subcommand("sqdiff", "#{x in r[L] : x^2 in A - A}");
    sqd->add_option("--set", set_path)->required();
    sqd->add_option("--r", r)->required();
    sqd->add_option("--L", L)->required();

    auto* tri = app.add_subcommand("trilinear", "#{x, y in A, z in r[Z] : x - y = z^2}");
    tri->add_option("--set", set_path)->required();
    tri->add_option("--r", r)->required();
    tri->add_option("--Z", Z)->required();

    auto* ext = app.add_subcommand("extremal", "Largest subset of [1, n] with no square difference");
    std::uint64_t n_ext = 0;
    std::string method = "bnb";
    ext->add_option("--n", n_ext)->required();
    ext->add_option("--budget-nodes", budget_nodes);
    ext->add_option("--method", method)->check(CLI::IsMember({"bnb", "split"}));

    auto* weyl = app.add_subcommand("weyl", "Weyl sum over squares at one angle");
    std::uint64_t n_prime = 0;
    std::string theta_text;
    weyl->add_option("--Nprime", n_prime)->required();
    weyl->add_option("--theta", theta_text, "j/M or a decimal")->required();

    auto* inc = app.add_subcommand("increment", "Many-solutions / increment trichotomy for a set");
    std::uint64_t q0 = 1;
    std::optional<std::uint64_t> n_ambient;
    inc->add_option("--set", set_path)->required();
    inc->add_option("--Nprime", n_prime)->required();
    inc->add_option("--Q0", q0)->required();
    inc->add_option("--N", n_ambient, "Ambient interval [1, N] (default: largest element)");

    auto* trace = app.add_subcommand("trace", "Replay colour elimination on a clean colouring");
    trace->add_option("--colouring", colouring_path);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "sqdiff: " << e.what() << "\n" << app.help();
      return kUsage;
    }

    auto budget = [&] {
      Budget b;
      b.nodes = budget_nodes;
      if (budget_seconds)
        b.wall = std::chrono::milliseconds(static_cast<std::int64_t>(*budget_seconds * 1000));
      return b;
    };

    try {
      if (*construct) return cmd_construct(k_construct, out_path);
      if (*verify) return cmd_verify(colouring_path);
      if (*search) return cmd_search(k_search, n_search, budget(), cnf_path, no_symmetry);
      if (*compute_s) return cmd_compute_s(k_s, budget());
      if (*encode) return cmd_encode(k_cnf, n_cnf, amo, out_path);
      if (*count) return cmd_count(colouring_path);
      if (*sqd) return cmd_sqdiff(set_path, r, L, false);
      if (*tri) return cmd_sqdiff(set_path, r, Z, true);
      if (*ext) return cmd_extremal(n_ext, method, budget());
      if (*weyl) return cmd_weyl(n_prime, theta_text);
      if (*inc) return cmd_increment(set_path, n_prime, q0, n_ambient);
      if (*trace) return cmd_trace(colouring_path);
    } catch (const CapacityError& e) {
      err_ << "sqdiff: capacity: " << e.what() << "\n";
      return kCapacity;
    } catch (const std::exception& e) {
      err_ << "sqdiff: " << e.what() << "\n";
      return kDomain;
    }
    return kUsage;
  }

 private:
  bool json() const { return format_ == "json-lines"; }

  void emit(const nlohmann::json& j) { out_ << j.dump() << '\n'; }

  Colouring load_colouring(const std::string& path) {
    if (path.empty() || path == "-") return read_colouring(in_);
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    return read_colouring(f);
  }

  IntegerSet load_set(const std::string& path) {
    if (path == "-") return read_set(in_);
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    return read_set(f);
  }

  void write_to(const std::string& path, const std::string& text) {
    if (path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write " + path);
    f << text;
  }

  int cmd_construct(unsigned k, const std::string& path) {
    const auto c = construct_lower_bound(k);
    if (json())
      emit({{"n", c.n().str()}, {"k", c.k()}, {"colouring", colouring_to_string(c)}});
    else
      write_to(path, colouring_to_string(c));
    return kOk;
  }

  int cmd_verify(const std::string& path) {
    const auto c = load_colouring(path);
    const auto v = verify_colouring(c);
    if (json()) {
      nlohmann::json j{{"verdict", v.clean() ? "clean" : "violation"}};
      if (v.witness)
        j.update({{"x", v.witness->triple.x.str()}, {"y", v.witness->triple.y.str()},
                  {"z", v.witness->triple.z.str()}, {"colour", v.witness->colour}});
      emit(j);
    } else if (v.clean()) {
      out_ << "clean\n";
    } else {
      const auto& w = *v.witness;
      out_ << "violation " << w.triple.x.str() << ' ' << w.triple.y.str() << ' ' << w.triple.z.str()
           << " colour " << w.colour << '\n';
    }
    return kOk;
  }

  int cmd_search(std::size_t k, std::optional<std::uint64_t> n, const Budget& b,
                 const std::string& cnf_path, bool no_symmetry) {
    if (!n) {
      if (!cnf_path.empty()) throw DomainError("--emit-cnf needs --n");
      return cmd_compute_s(k, b);
    }
    if (!cnf_path.empty()) {
      std::ofstream f(cnf_path);
      if (!f) throw DomainError("cannot write " + cnf_path);
      write_dimacs(f, encode_cnf(k, *n));
    }
    SearchOptions opts;
    opts.symmetry_breaking = !no_symmetry;
    const auto res = feasible(k, *n, b, opts);
    err_ << "nodes " << res.nodes_explored << ", " << res.elapsed.count() << " ms\n";
    if (json()) {
      nlohmann::json j{{"status", to_string(res.status)}, {"n", *n}, {"k", k},
                       {"nodes", res.nodes_explored}};
      if (res.witness) j["witness"] = colouring_to_string(*res.witness);
      emit(j);
    } else {
      out_ << to_string(res.status) << '\n';
      if (res.witness) write_colouring(out_, *res.witness);
    }
    return res.status == SearchStatus::Unknown ? kCapacity : kOk;
  }

  int cmd_compute_s(std::size_t k, const Budget& b) {
    const auto res = compute_S(k, b);
    for (const auto& p : res.probes)
      err_ << "n=" << p.n << ' ' << to_string(p.status) << " nodes=" << p.nodes << '\n';
    if (json()) {
      nlohmann::json probes = nlohmann::json::array();
      for (const auto& p : res.probes)
        probes.push_back({{"n", p.n}, {"status", to_string(p.status)}, {"nodes", p.nodes}});
      emit({{"k", k}, {"value", res.value}, {"exact", res.exact}, {"probes", probes}});
    } else {
      out_ << (res.exact ? "exact " : "lower_bound ") << res.value << '\n';
    }
    return kOk;
  }

  int cmd_encode(std::size_t k, std::uint64_t n, bool amo, const std::string& path) {
    write_to(path, to_dimacs(encode_cnf(k, n, amo)));
    return kOk;
  }

  int cmd_count(const std::string& path) {
    const auto counts = count_per_class(load_colouring(path));
    if (json()) {
      emit({{"per_class", counts.per_class}, {"cross", counts.cross_class}, {"total", counts.total}});
      return kOk;
    }
    for (std::size_t c = 0; c < counts.per_class.size(); ++c)
      out_ << "class " << c << ' ' << counts.per_class[c] << '\n';
    out_ << "cross " << counts.cross_class << '\n' << "total " << counts.total << '\n';
    return kOk;
  }

  int cmd_sqdiff(const std::string& path, std::uint64_t r, std::uint64_t len, bool trilinear) {
    const auto a = load_set(path);
    const auto v = trilinear ? trilinear_count(a, r, len) : sqdiff_count(a, r, len);
    if (json()) emit({{"count", v}});
    else out_ << v << '\n';
    return kOk;
  }

  int cmd_extremal(std::uint64_t n, const std::string& method, const Budget& b) {
    const auto res = method == "split" ? fs_extremal_split(n) : fs_extremal(n, b);
    if (json()) {
      emit({{"n", n}, {"size", res.size}, {"optimal", res.optimal}, {"witness", res.witness}});
      return kOk;
    }
    out_ << "size " << res.size << ' ' << (res.optimal ? "optimal" : "best-found") << '\n';
    for (std::size_t i = 0; i < res.witness.size(); ++i) out_ << (i ? " " : "") << res.witness[i];
    out_ << '\n';
    return res.optimal ? kOk : kCapacity;
  }

  int cmd_weyl(std::uint64_t n_prime, const std::string& text) {
    const auto theta = parse_theta(text);
    const auto v = theta.grid ? analytic::weyl_sum(*theta.grid, n_prime)
                              : analytic::weyl_sum(theta.value, n_prime);
    if (json())
      emit({{"theta", text}, {"Nprime", n_prime}, {"re", v.real()}, {"im", v.imag()}, {"abs", std::abs(v)}});
    else
      out_ << fmt_double(v.real()) << ' ' << fmt_double(v.imag()) << ' ' << fmt_double(std::abs(v)) << '\n';
    return kOk;
  }

  int cmd_increment(const std::string& path, std::uint64_t n_prime, std::uint64_t q0,
                    std::optional<std::uint64_t> n_ambient) {
    const auto a = load_set(path);
    if (a.empty()) throw PreconditionError("empty set");
    const std::uint64_t n = n_ambient ? *n_ambient : static_cast<std::uint64_t>(std::max<std::int64_t>(1, a.back()));
    const auto res = analytic::increment_search(a, n, n_prime, q0);
    nlohmann::json j{{"branch", analytic::branch_name(res)}};
    std::ostringstream line;
    line << analytic::branch_name(res);
    if (const auto* f = std::get_if<analytic::FurtherTooLarge>(&res)) {
      j["limit"] = f->limit;
      line << ' ' << fmt_double(f->limit);
    } else if (const auto* m = std::get_if<analytic::ManySolutions>(&res)) {
      j.update({{"count", m->count}, {"threshold", m->threshold}});
      line << ' ' << m->count << ' ' << fmt_double(m->threshold);
    } else if (const auto* i = std::get_if<analytic::Increment>(&res)) {
      j.update({{"q", i->q}, {"length", i->length}, {"offset", i->offset}, {"count", i->count},
                {"new_density", i->new_density}});
      line << ' ' << i->q << ' ' << i->length << ' ' << i->offset << ' ' << i->count << ' '
           << fmt_double(i->new_density);
    } else if (const auto* nb = std::get_if<analytic::NoBranch>(&res)) {
      j.update({{"best_density", nb->best_density}, {"target_density", nb->target_density}});
      line << ' ' << fmt_double(nb->best_density) << ' ' << fmt_double(nb->target_density);
    }
    if (json()) emit(j);
    else out_ << line.str() << '\n';
    return kOk;
  }

  int cmd_trace(const std::string& path) {
    const auto tr = analytic::iteration_trace(load_colouring(path));
    for (const auto& s : tr.stages) {
      if (json()) {
        nlohmann::json j{{"i", s.index}, {"J", s.J}, {"d", s.d}, {"N", s.size}, {"x", s.offset},
                         {"alpha", s.alpha}, {"r", s.r}, {"L", s.L}, {"witnesses", s.witnesses},
                         {"coverage", s.coverage}};
        j["chosen"] = s.chosen ? nlohmann::json(*s.chosen) : nlohmann::json(nullptr);
        emit(j);
      } else {
        out_ << s.index << ' ' << s.J.size() << ' ' << s.d << ' ' << s.size << ' ' << s.offset << ' '
             << fmt_fixed(s.alpha) << '\n';
      }
    }
    if (json()) emit({{"terminal", tr.terminal}});
    else err_ << "terminal " << tr.terminal << '\n';
    return kOk;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::string format_ = "text";
  std::uint64_t seed_ = 0;
  unsigned threads_ = 0;
};

inline int run(const std::vector<std::string>& args, std::istream& in = std::cin,
               std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(in, out, err).run(args);
}

}  // namespace sqdiff::cli
