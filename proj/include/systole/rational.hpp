// Copyright 2026 The systole Authors
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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace systole {

using Rational = mpq_class;
using Integer = mpz_class;

// Always "num/den", including integers ("1/1").
std::string to_fraction_string(const Rational& q);

// Accepts "num/den" with an optional leading sign; throws Error(MalformedLine)
// on anything else. The result is canonicalized.
Rational parse_fraction(std::string_view text);

double to_double(const Rational& q);

}  // namespace systole
