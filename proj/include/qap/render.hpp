// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0
//
// Table renderers.  Partitions print in the two-column conjugate-pair layout
// (center block first, W left, W-hat right, null sides as {0}).

#pragma once

#include <string>

#include "qap/partition.hpp"

namespace qap {

std::string to_text(const QAPartition& q);
std::string to_json(const QAPartition& q);

}  // namespace qap
