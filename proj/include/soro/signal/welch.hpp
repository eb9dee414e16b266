#pragma once

#include "soro/lti/analysis.hpp"
#include "soro/signal/record.hpp"

namespace soro::signal {

/// Welch averaged-periodogram PSD, Hann windowed, one-sided, on a rad/s
/// grid. magnitude_db is 10*log10 of the density (units^2 per rad/s-free
/// density in units^2/Hz); total power integrates back to the signal
/// variance within a few percent. `nfft` pads segments for a finer grid
/// (0 means next power of two above segment_len).
lti::FrequencyResponse psd_welch(const SignalRecord& x, int segment_len, double overlap,
                                 int nfft = 0);

}  // namespace soro::signal
