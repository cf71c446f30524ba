#pragma once

// Everything: fields, codes, harmonic functions, enumerators, matroids, designs.

#include "hwe/error.hpp"
#include "hwe/rational.hpp"
#include "hwe/gfq.hpp"
#include "hwe/qcomb.hpp"
#include "hwe/linalg.hpp"
#include "hwe/code.hpp"
#include "hwe/harmonic.hpp"
#include "hwe/poly.hpp"
#include "hwe/enumerators.hpp"
#include "hwe/matroid.hpp"
#include "hwe/designs.hpp"
#include "hwe/io.hpp"
