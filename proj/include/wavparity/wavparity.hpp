#pragma once

#include "clustering.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "evaluation.hpp"
#include "features.hpp"
#include "pipeline.hpp"
#include "report_json.hpp"
#include "signal_codec.hpp"
#include "svg.hpp"
#include "wavelet.hpp"
