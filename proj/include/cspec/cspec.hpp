#pragma once

#include "cspec/graph.hpp"
#include "cspec/connectivity.hpp"
#include "cspec/io.hpp"
#include "cspec/spectra.hpp"
#include "cspec/constructions.hpp"
#include "cspec/quotient.hpp"
#include "cspec/enumeration.hpp"
#include "cspec/verifier.hpp"
#include "cspec/report.hpp"
