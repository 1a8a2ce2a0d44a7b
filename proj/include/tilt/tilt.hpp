#pragma once

/**
 * @file tilt.hpp
 * @brief Umbrella header for the whole library.
 */

#include "tilt/algebra.hpp"
#include "tilt/complex.hpp"
#include "tilt/decompose.hpp"
#include "tilt/errors.hpp"
#include "tilt/field.hpp"
#include "tilt/module.hpp"
#include "tilt/silting.hpp"
#include "tilt/stability.hpp"
#include "tilt/tau.hpp"
#include "tilt/verify.hpp"
