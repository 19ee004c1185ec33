#pragma once

// Umbrella header.
#include "anchorrec/anchor.hpp"
#include "anchorrec/bundle.hpp"
#include "anchorrec/canonical.hpp"
#include "anchorrec/combinatorics.hpp"
#include "anchorrec/deck.hpp"
#include "anchorrec/embedding.hpp"
#include "anchorrec/errors.hpp"
#include "anchorrec/experiments.hpp"
#include "anchorrec/graph.hpp"
#include "anchorrec/graph6.hpp"
#include "anchorrec/permutation.hpp"
#include "anchorrec/probability.hpp"
#include "anchorrec/report.hpp"
#include "anchorrec/rng.hpp"
#include "anchorrec/vertex_set.hpp"
