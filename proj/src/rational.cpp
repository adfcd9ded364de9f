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

#include "systole/error.hpp"
#include "systole/rational.hpp"

#include <cctype>

namespace systole {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::ContractionOfCycle: return "ContractionOfCycle";
    case ErrorKind::NoCycle: return "NoCycle";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ForeignCycle: return "ForeignCycle";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::DegenerateStage: return "DegenerateStage";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotStrictlyShorter: return "NotStrictlyShorter";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::UnknownDataset: return "UnknownDataset";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::MalformedLine,
                "not a rational of the form num/den: '" + std::string(text) + "'");
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return fail();
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    negative = num[0] == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) return fail();
  Integer d(std::string(den), 10);
  if (d == 0) return fail();
  Integer n(std::string(num), 10);
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace systole
