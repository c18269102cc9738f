#pragma once

#include "charkit/errors.hpp"
#include "charkit/core/ambient.hpp"
#include "charkit/core/geometry.hpp"
#include "charkit/core/lines.hpp"
#include "charkit/core/residues.hpp"
#include "charkit/core/subspace.hpp"
#include "charkit/scalars/complex.hpp"
#include "charkit/scalars/cyclotomic.hpp"
#include "charkit/scalars/rational.hpp"
#include "charkit/scalars/traits.hpp"
#include "charkit/fourier/grid.hpp"
#include "charkit/fourier/transform.hpp"
#include "charkit/spectrum/support.hpp"
#include "charkit/spectrum/theorems.hpp"
#include "charkit/wavelets/wavelet.hpp"
#include "charkit/wavelets/tomography.hpp"
#include "charkit/varieties/varieties.hpp"
#include "charkit/eigen/eigen.hpp"
#include "charkit/zmodpl/zmodpl.hpp"
