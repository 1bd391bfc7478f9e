// Copyright 2026 The qe7 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QE7_ERRORS_H
#define QE7_ERRORS_H

#include <stdexcept>
#include <string>

namespace qe7 {

/// An operator whose conjugation does not preserve the Heisenberg matrices.
class NotInNormalizer : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A computation reached a state that the mathematics rules out.
class InternalInconsistency : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace qe7

#endif
