// Copyright 2026 The bqt Authors
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

// Computed-versus-reference findings, gathered into one deterministic report.

#include <string>
#include <vector>

namespace bqt {

struct LedgerEntry {
  std::string id;      // stable short key, e.g. "cnot-table"
  std::string title;
  std::vector<std::string> lines;
  int findings = 0;    // discrepancies found by this check
};

/// Every check in a fixed order. The oracle checks run seeded verify passes.
std::vector<LedgerEntry> ledger_entries();

/// The entries rendered as text, preceded by the list of checks performed.
std::string ledger_report();

}  // namespace bqt
