#pragma once

#include "fdist/rational.hpp"
#include "fdist/scalar.hpp"
#include "fdist/errors.hpp"
#include "fdist/interval.hpp"
#include "fdist/labels.hpp"
#include "fdist/mass.hpp"
#include "fdist/slicing.hpp"
#include "fdist/fuzzy.hpp"
#include "fdist/defuzz.hpp"
#include "fdist/unification.hpp"
#include "fdist/distance.hpp"
#include "fdist/restriction.hpp"
