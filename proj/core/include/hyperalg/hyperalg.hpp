#pragma once

#include "hyperalg/bm_product.hpp"
#include "hyperalg/graph.hpp"
#include "hyperalg/hmx_io.hpp"
#include "hyperalg/hypermatrix.hpp"
#include "hyperalg/invariant.hpp"
#include "hyperalg/koenig.hpp"
#include "hyperalg/linalg.hpp"
#include "hyperalg/power.hpp"
#include "hyperalg/prime_field.hpp"
#include "hyperalg/rational.hpp"
#include "hyperalg/scalar.hpp"
