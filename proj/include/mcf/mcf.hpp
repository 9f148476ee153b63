#pragma once

#include "mcf/error.hpp"
#include "mcf/ring.hpp"
#include "mcf/ideal.hpp"
#include "mcf/matrix.hpp"
#include "mcf/generators.hpp"
#include "mcf/group.hpp"
#include "mcf/calculus.hpp"
#include "mcf/bracket.hpp"
#include "mcf/verifier.hpp"
#include "mcf/lemmas.hpp"
#include "mcf/parse.hpp"
#include "mcf/report.hpp"
