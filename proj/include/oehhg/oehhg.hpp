#pragma once

// Umbrella header: TDSE-based odd-even harmonic generation in THz-assisted
// atoms, the universal even-to-odd law, and THz waveform sampling.

#include "oehhg/atom.hpp"
#include "oehhg/config.hpp"
#include "oehhg/fft.hpp"
#include "oehhg/grid.hpp"
#include "oehhg/ground_state.hpp"
#include "oehhg/io.hpp"
#include "oehhg/orbits.hpp"
#include "oehhg/parallel.hpp"
#include "oehhg/pipeline.hpp"
#include "oehhg/propagate.hpp"
#include "oehhg/pulses.hpp"
#include "oehhg/sampling.hpp"
#include "oehhg/spectrum.hpp"
#include "oehhg/svg.hpp"
#include "oehhg/units.hpp"
#include "oehhg/wavefunction.hpp"
