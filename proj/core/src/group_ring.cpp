// Copyright 2026 The gramcert Authors
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

#include "gramcert/group_ring.hpp"

namespace gramcert {

QElement target(const Rational& eps, const GeneratorSet& gens) {
  if (eps < 0) throw std::invalid_argument("target: eps must be nonnegative");
  const QElement delta = laplacian<Rational>(gens);
  QElement a = mul(delta, delta);
  a -= Rational(eps) * delta;
  return a;
}

}  // namespace gramcert
