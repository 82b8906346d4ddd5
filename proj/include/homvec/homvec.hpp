#pragma once

// Umbrella header for the homvec library.

#include "homvec/biso.hpp"
#include "homvec/bruteforce.hpp"
#include "homvec/error.hpp"
#include "homvec/exact_solve.hpp"
#include "homvec/graph.hpp"
#include "homvec/graph_io.hpp"
#include "homvec/hom.hpp"
#include "homvec/kernel.hpp"
#include "homvec/kwl.hpp"
#include "homvec/linsys.hpp"
#include "homvec/numeric.hpp"
#include "homvec/refine.hpp"
#include "homvec/report.hpp"
#include "homvec/simplex.hpp"
#include "homvec/spectral.hpp"
#include "homvec/suite.hpp"
#include "homvec/treedecomp.hpp"
#include "homvec/trees.hpp"
#include "homvec/unfold.hpp"
