// Umbrella header.
#pragma once

#include "quadprime/arithmetic.hpp"
#include "quadprime/atlas.hpp"
#include "quadprime/character.hpp"
#include "quadprime/field.hpp"
#include "quadprime/ideals.hpp"
#include "quadprime/sieve.hpp"
#include "quadprime/verify.hpp"
