#ifndef FEQ_FEQ_HPP_
#define FEQ_FEQ_HPP_

#include "carrier.hpp"
#include "families.hpp"
#include "instance.hpp"
#include "morphisms.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "solver.hpp"
#include "table_search.hpp"
#include "verify.hpp"

#endif  // FEQ_FEQ_HPP_
