#pragma once

// Umbrella header for the library (everything except the command-line front end).

#include "qsing/cyclotomic.hpp"
#include "qsing/dedekind.hpp"
#include "qsing/enumerator.hpp"
#include "qsing/errors.hpp"
#include "qsing/invariants.hpp"
#include "qsing/rational.hpp"
#include "qsing/report.hpp"
#include "qsing/singularity.hpp"
