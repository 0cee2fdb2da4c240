#pragma once

#include "lefzeta/alexander.hpp"
#include "lefzeta/braid.hpp"
#include "lefzeta/duality.hpp"
#include "lefzeta/graded_action.hpp"
#include "lefzeta/json_io.hpp"
#include "lefzeta/laurent.hpp"
#include "lefzeta/matrix.hpp"
#include "lefzeta/poly_matrix.hpp"
#include "lefzeta/polynomial.hpp"
#include "lefzeta/rational.hpp"
#include "lefzeta/rational_function.hpp"
#include "lefzeta/zeta.hpp"
