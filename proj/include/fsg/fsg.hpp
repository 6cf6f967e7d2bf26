// fsg.hpp — umbrella header.
#pragma once

#include "bijection.hpp"
#include "combinat.hpp"
#include "fs.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "lab.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "theory.hpp"
