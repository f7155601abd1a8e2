#pragma once

#include "latcol/checked.hpp"
#include "latcol/classifier.hpp"
#include "latcol/error.hpp"
#include "latcol/lattice.hpp"
#include "latcol/totient.hpp"
#include "latcol/unimodular.hpp"
