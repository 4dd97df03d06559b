# Copyright 2026 The qwgi Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quantum-walk distinguishers for CFI and strongly regular graph pairs."""

from ._qwgi import (
    ConvergenceError,
    Error,
    Graph,
    InvalidArgument,
    OracleOutOfRange,
    ResourceError,
    StructuralError,
    cfi_pair,
    complete_graph,
    cycle_graph,
    delta,
    disjoint_union,
    mhop,
    occupation_dimension,
    occupation_graph,
    parse_edge_list,
    parse_graph6,
    read_graph,
    resolve_pair,
    run_experiment,
    srg_family,
    srg_params,
    theta_grid,
    wl_equal,
    write_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
