#pragma once

#include "srbetti/betti.hpp"
#include "srbetti/complex.hpp"
#include "srbetti/coning.hpp"
#include "srbetti/errors.hpp"
#include "srbetti/extremality.hpp"
#include "srbetti/fvector.hpp"
#include "srbetti/gf.hpp"
#include "srbetti/hilbert.hpp"
#include "srbetti/hochster.hpp"
#include "srbetti/homology.hpp"
#include "srbetti/json_io.hpp"
#include "srbetti/lex.hpp"
#include "srbetti/parallel.hpp"
#include "srbetti/search.hpp"
#include "srbetti/vertex_set.hpp"
