#pragma once

// Umbrella header: exact combinatorics of partitions, domino tableaux,
// growth-diagram correspondences, sign imbalance, and the identity
// verification registry.

#include "domino/growth.hpp"
#include "domino/imbalance.hpp"
#include "domino/json_io.hpp"
#include "domino/laurent.hpp"
#include "domino/schensted.hpp"
#include "domino/series.hpp"
#include "domino/shapes.hpp"
#include "domino/tableau.hpp"
#include "domino/verify.hpp"
