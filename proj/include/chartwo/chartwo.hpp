#pragma once

#include "cones.hpp"
#include "formulas.hpp"
#include "gf2.hpp"
#include "jordan_basis.hpp"
#include "jordan_type.hpp"
#include "kinds.hpp"
#include "module_expr.hpp"
#include "rep_oracle.hpp"
