#pragma once

// Umbrella header: the full solver pipeline from source text to preferred
// answer sets, principle checks, and report serialization.

#include "praset/attacks.hpp"
#include "praset/core.hpp"
#include "praset/parser.hpp"
#include "praset/principles.hpp"
#include "praset/program.hpp"
#include "praset/random.hpp"
#include "praset/report.hpp"
#include "praset/semantics.hpp"
#include "praset/structures.hpp"
