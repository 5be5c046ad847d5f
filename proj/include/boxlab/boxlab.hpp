#ifndef BOXLAB_BOXLAB_HPP
#define BOXLAB_BOXLAB_HPP

#include "boxlab/core/bitset.hpp"
#include "boxlab/core/box.hpp"
#include "boxlab/core/compose.hpp"
#include "boxlab/core/error.hpp"
#include "boxlab/core/graph.hpp"
#include "boxlab/core/poset.hpp"
#include "boxlab/core/random.hpp"
#include "boxlab/core/verify.hpp"

#include "boxlab/certificate.hpp"
#include "boxlab/formulas.hpp"
#include "boxlab/lll.hpp"
#include "boxlab/suitable.hpp"

#include "boxlab/builders/bipartite_suitable.hpp"
#include "boxlab/builders/caught_permutation.hpp"
#include "boxlab/builders/cover.hpp"
#include "boxlab/builders/degenerate.hpp"
#include "boxlab/builders/pair_elimination.hpp"
#include "boxlab/builders/span_gadget.hpp"
#include "boxlab/builders/treewidth.hpp"
#include "boxlab/builders/vertex_deletion.hpp"

#include "boxlab/pipelines/bound.hpp"
#include "boxlab/pipelines/degree.hpp"
#include "boxlab/pipelines/genus.hpp"
#include "boxlab/pipelines/layered.hpp"

#include "boxlab/generators.hpp"
#include "boxlab/io.hpp"
#include "boxlab/oracle.hpp"
#include "boxlab/poset_bridge.hpp"

#endif // BOXLAB_BOXLAB_HPP
