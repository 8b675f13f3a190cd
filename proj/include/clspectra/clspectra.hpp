#pragma once

#include "clspectra/analysis.hpp"
#include "clspectra/assumptions.hpp"
#include "clspectra/degree_sequence.hpp"
#include "clspectra/graph_sample.hpp"
#include "clspectra/io.hpp"
#include "clspectra/moment_engine.hpp"
#include "clspectra/oracles.hpp"
#include "clspectra/rng.hpp"
#include "clspectra/spectra.hpp"
