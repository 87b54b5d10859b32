#pragma once

#include "affdev/affine.hpp"
#include "affdev/cayley_menger.hpp"
#include "affdev/correspondence.hpp"
#include "affdev/development.hpp"
#include "affdev/embedded.hpp"
#include "affdev/errors.hpp"
#include "affdev/geometry.hpp"
#include "affdev/interval.hpp"
#include "affdev/patch.hpp"
#include "affdev/polynomial.hpp"
#include "affdev/recognizer.hpp"
#include "affdev/simplepath.hpp"
#include "affdev/solver.hpp"
#include "affdev/suspension.hpp"
#include "affdev/verdict.hpp"
