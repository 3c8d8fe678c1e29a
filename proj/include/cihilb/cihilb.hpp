#pragma once

#include "error.hpp"
#include "rational.hpp"
#include "unipoly.hpp"
#include "series.hpp"
#include "sequence.hpp"
#include "symfunc.hpp"
#include "todd.hpp"
#include "hilbert.hpp"
#include "recover.hpp"
#include "search.hpp"
#include "io.hpp"
