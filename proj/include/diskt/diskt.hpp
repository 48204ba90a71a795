#pragma once

#include "checks.hpp"
#include "diskalg.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "linalg.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "polynomial_io.hpp"
#include "quadrature.hpp"
#include "sampling.hpp"
#include "scalar.hpp"
#include "specfun.hpp"
#include "spectral.hpp"
#include "transforms.hpp"
