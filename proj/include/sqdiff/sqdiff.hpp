#pragma once

#include "sqdiff/bignum.hpp"
#include "sqdiff/budget.hpp"
#include "sqdiff/cnf.hpp"
#include "sqdiff/colouring.hpp"
#include "sqdiff/colouring_io.hpp"
#include "sqdiff/construct.hpp"
#include "sqdiff/counting.hpp"
#include "sqdiff/dpll.hpp"
#include "sqdiff/errors.hpp"
#include "sqdiff/extremal.hpp"
#include "sqdiff/integer_set.hpp"
#include "sqdiff/search.hpp"
#include "sqdiff/solutions.hpp"
#include "sqdiff/verify.hpp"
#include "sqdiff/analytic/increment.hpp"
#include "sqdiff/analytic/iteration.hpp"
#include "sqdiff/analytic/major_arcs.hpp"
#include "sqdiff/analytic/parseval.hpp"
#include "sqdiff/analytic/rational_approx.hpp"
#include "sqdiff/analytic/weyl.hpp"
