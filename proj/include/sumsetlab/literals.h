// Copyright 2026 The sumsetlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats shared by the CLI and the JSON reports.
//
//   group    "5,5"  (cyclic orders, normalized to invariant factors);
//            "" or "trivial" is the trivial group
//   element  "(2,3)"; "()" in the trivial group
//   set      "{(0,0),(1,0)}"  or  "<group>:0x<hex>", where the hex digits
//            spell the integer sum of 2^index over the members, most
//            significant digit first, e.g. "5,5:0x3"

#pragma once

#include <string>
#include <string_view>

#include "sumsetlab/dense_subset.h"
#include "sumsetlab/group.h"

namespace sumsetlab {

GroupSpec ParseGroupLiteral(std::string_view text);
GroupElement ParseElementLiteral(std::string_view text, const GroupSpec& spec);
// Accepts both set formats. A hex literal must name the same group.
DenseSubset ParseSetLiteral(std::string_view text, const GroupPtr& group);

std::string FormatElement(const GroupElement& g);
// Members in increasing index order.
std::string FormatSetLiteral(const DenseSubset& a);
std::string FormatSetHex(const DenseSubset& a);

}  // namespace sumsetlab
