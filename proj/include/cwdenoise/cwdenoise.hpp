#pragma once

// Umbrella header for the whole toolkit.

#include "cwdenoise/bench.hpp"
#include "cwdenoise/bilateral.hpp"
#include "cwdenoise/calibration.hpp"
#include "cwdenoise/dtcwt.hpp"
#include "cwdenoise/filters.hpp"
#include "cwdenoise/image.hpp"
#include "cwdenoise/metrics.hpp"
#include "cwdenoise/noise.hpp"
#include "cwdenoise/pgm.hpp"
#include "cwdenoise/pipeline.hpp"
#include "cwdenoise/shrinkage.hpp"
