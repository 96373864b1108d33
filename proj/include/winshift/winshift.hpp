#pragma once

// Umbrella header: the full library in dependency order.

#include "winshift/alphabet.hpp"
#include "winshift/language.hpp"
#include "winshift/dfa.hpp"
#include "winshift/nfa.hpp"
#include "winshift/ops.hpp"
#include "winshift/regex.hpp"
#include "winshift/io.hpp"
#include "winshift/games.hpp"
#include "winshift/winning.hpp"
#include "winshift/entropy.hpp"
#include "winshift/zoo.hpp"
#include "winshift/checks.hpp"
