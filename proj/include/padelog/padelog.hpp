#ifndef PADELOG_PADELOG_HPP
#define PADELOG_PADELOG_HPP

#include "padelog/json_io.hpp"
#include "padelog/linalg.hpp"
#include "padelog/measures.hpp"
#include "padelog/normality.hpp"
#include "padelog/number_theory.hpp"
#include "padelog/numeric_eval.hpp"
#include "padelog/pade_binlog.hpp"
#include "padelog/pade_exp.hpp"
#include "padelog/polynomial.hpp"
#include "padelog/rational.hpp"
#include "padelog/real.hpp"
#include "padelog/series.hpp"

#endif
