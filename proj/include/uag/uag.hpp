#pragma once

#include "uag/algebra.hpp"
#include "uag/constructions.hpp"
#include "uag/dsl.hpp"
#include "uag/error.hpp"
#include "uag/eval.hpp"
#include "uag/io.hpp"
#include "uag/magma.hpp"
#include "uag/random.hpp"
#include "uag/signature.hpp"
#include "uag/solver.hpp"
#include "uag/term.hpp"
#include "uag/zero_mult.hpp"
#include "uag/zoo.hpp"
