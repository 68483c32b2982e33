#pragma once

#include "simcolor/algorithms.hpp"
#include "simcolor/bench.hpp"
#include "simcolor/certificate.hpp"
#include "simcolor/constructions.hpp"
#include "simcolor/exact.hpp"
#include "simcolor/graph.hpp"
#include "simcolor/io.hpp"
#include "simcolor/pair_coloring.hpp"
#include "simcolor/sqrt_coloring.hpp"
#include "simcolor/verifier.hpp"
#include "simcolor/vizing.hpp"
