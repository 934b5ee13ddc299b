#pragma once

#include "mgsim/timeseries.hpp"

#include <string>

namespace mgsim {

/// Renders the fixed CSV contract: header
///   t,v_pcc,i_load,p_load,mode[,vref_k,vterm_k,i_k,p_k,comp_k ...]
/// then one row per sample, floating point with 6 significant digits and the
/// mode as integer (0 centralized, 1 none, 2 decentralized).
std::string to_csv(const TimeSeries& series);

/// CSV header for n converters.
std::string csv_header(int n_converters);

} // namespace mgsim
