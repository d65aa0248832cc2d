#pragma once

#include "conference.hpp"
#include "constructions.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "search.hpp"
#include "spectra.hpp"
