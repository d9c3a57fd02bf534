//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_HPP_
#define CYCLOGRAPH_HPP_

#include "cyclograph/clique.hpp"
#include "cyclograph/cyclebasis.hpp"
#include "cyclograph/cyclegraph.hpp"
#include "cyclograph/cyclespace.hpp"
#include "cyclograph/error.hpp"
#include "cyclograph/generator.hpp"
#include "cyclograph/graphcore.hpp"
#include "cyclograph/mces.hpp"
#include "cyclograph/molecule.hpp"
#include "cyclograph/molio.hpp"
#include "cyclograph/search.hpp"

#endif  // CYCLOGRAPH_HPP_
