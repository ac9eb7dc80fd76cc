#pragma once

// Swarm-intelligence optimizers for bounded continuous minimization:
// artificial bee colony and firefly algorithm, plus the benchmark functions,
// the multi-seed experiment harness and report serialization.

#include "swarmopt/abc.hpp"
#include "swarmopt/benchmarks.hpp"
#include "swarmopt/core.hpp"
#include "swarmopt/firefly.hpp"
#include "swarmopt/harness.hpp"
#include "swarmopt/report_io.hpp"
