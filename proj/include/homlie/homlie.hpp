#pragma once

// Umbrella header for the whole library.

#include "homlie/actions.hpp"
#include "homlie/central_ext.hpp"
#include "homlie/diagram.hpp"
#include "homlie/errors.hpp"
#include "homlie/format.hpp"
#include "homlie/hom_assoc.hpp"
#include "homlie/hom_lie.hpp"
#include "homlie/homology.hpp"
#include "homlie/linalg.hpp"
#include "homlie/matrix.hpp"
#include "homlie/scalar.hpp"
#include "homlie/tensor.hpp"
