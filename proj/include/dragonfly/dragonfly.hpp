#pragma once

// Umbrella header: finite residuated chains with an unknown value, the
// qualitative integrals over them, known/unknown-result characterizations,
// and admissible-capacity identification from rated data.

#include "algebra.hpp"        // IWYU pragma: export
#include "capacity.hpp"       // IWYU pragma: export
#include "characterization.hpp"  // IWYU pragma: export
#include "dvalue.hpp"         // IWYU pragma: export
#include "errors.hpp"         // IWYU pragma: export
#include "identification.hpp" // IWYU pragma: export
#include "integrals.hpp"      // IWYU pragma: export
#include "io.hpp"             // IWYU pragma: export
#include "laws.hpp"           // IWYU pragma: export
#include "scale.hpp"          // IWYU pragma: export
