#pragma once

#include "l1approx/best_l1.hpp"
#include "l1approx/bernoulli_series.hpp"
#include "l1approx/favard.hpp"
#include "l1approx/fourier.hpp"
#include "l1approx/kernels.hpp"
#include "l1approx/lipschitz.hpp"
#include "l1approx/periodic_fn.hpp"
#include "l1approx/trig_poly.hpp"
