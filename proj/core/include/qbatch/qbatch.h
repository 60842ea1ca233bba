// Copyright 2026 The qbatch Authors
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

#ifndef QBATCH_QBATCH_H
#define QBATCH_QBATCH_H

#include "qbatch/circuit.h"
#include "qbatch/contraction.h"
#include "qbatch/cost.h"
#include "qbatch/error.h"
#include "qbatch/gates.h"
#include "qbatch/graph.h"
#include "qbatch/graphical_model.h"
#include "qbatch/oracle.h"
#include "qbatch/ordering.h"
#include "qbatch/tensor.h"

#endif  // QBATCH_QBATCH_H
