#pragma once

#include "ptkit/alphabet.hpp"
#include "ptkit/automata.hpp"
#include "ptkit/complexity.hpp"
#include "ptkit/dot.hpp"
#include "ptkit/errors.hpp"
#include "ptkit/harness.hpp"
#include "ptkit/json_io.hpp"
#include "ptkit/nfa.hpp"
#include "ptkit/products.hpp"
#include "ptkit/pt.hpp"
#include "ptkit/regex.hpp"
#include "ptkit/rng.hpp"
#include "ptkit/subwords.hpp"
#include "ptkit/witness.hpp"
