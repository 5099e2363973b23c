#pragma once

#include "dominator/bounds.hpp"
#include "dominator/error.hpp"
#include "dominator/exact.hpp"
#include "dominator/generators.hpp"
#include "dominator/graph.hpp"
#include "dominator/io.hpp"
#include "dominator/lll.hpp"
#include "dominator/matching.hpp"
#include "dominator/rational.hpp"
#include "dominator/rng.hpp"
#include "dominator/turan.hpp"
