#pragma once

#include "plumb/census.hpp"
#include "plumb/certificate.hpp"
#include "plumb/classify.hpp"
#include "plumb/continued_fraction.hpp"
#include "plumb/error.hpp"
#include "plumb/graph.hpp"
#include "plumb/isomorphism.hpp"
#include "plumb/json_io.hpp"
#include "plumb/lattice.hpp"
#include "plumb/laufer.hpp"
#include "plumb/rational.hpp"
#include "plumb/seifert.hpp"
#include "plumb/surgery.hpp"
