#pragma once

#include "hopfx/error.hpp"
#include "hopfx/field.hpp"
#include "hopfx/matrix.hpp"
#include "hopfx/subspace.hpp"
#include "hopfx/poly.hpp"
#include "hopfx/algebra.hpp"
#include "hopfx/bialgebra.hpp"
#include "hopfx/repn.hpp"
#include "hopfx/hopf.hpp"
#include "hopfx/rewrite.hpp"
#include "hopfx/groups.hpp"
#include "hopfx/corpus.hpp"
#include "hopfx/specmap.hpp"
#include "hopfx/io.hpp"
