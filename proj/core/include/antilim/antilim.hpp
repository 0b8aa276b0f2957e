// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

#ifndef ANTILIM_ANTILIM_HPP_
#define ANTILIM_ANTILIM_HPP_

/** Umbrella header pulling in the whole library. */

#include <antilim/kernel.hpp>
#include <antilim/epsilon_aitken.hpp>
#include <antilim/interpolation.hpp>
#include <antilim/omega.hpp>
#include <antilim/levin_like.hpp>
#include <antilim/theta_like.hpp>
#include <antilim/series_lab.hpp>

#endif // ANTILIM_ANTILIM_HPP_
