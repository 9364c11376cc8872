#pragma once

#include "misere/census.hpp"
#include "misere/comparison.hpp"
#include "misere/constructions.hpp"
#include "misere/game.hpp"
#include "misere/harness.hpp"
#include "misere/impartial.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"
#include "misere/report.hpp"
