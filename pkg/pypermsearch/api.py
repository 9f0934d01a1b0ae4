# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

""" Pseudo-package for all of the core functions from PYPERMSEARCH.

Use this module for importing PYPERMSEARCH function names into your
namespace. For example::

    from pypermsearch.api import reduction_b, exact_error_search
"""

from __future__ import absolute_import

from .apply_function_oracle import apply_function_oracle, apply_classical_xor
from .baseline_perm_solver import baseline_perm_solver
from .build_h import build_h, h_route
from .classical_algorithm import ClassicalAlgorithm, QueryTranscript
from .clean_h_query import clean_h_query, CleanHOracle
from .cmd_grover_scan import cmd_grover_scan
from .cmd_sampling_tests import cmd_sampling_tests
from .cmd_verify_reduction import cmd_verify_reduction
from .compose_self_reduction import compose_self_reduction
from .counted_oracle import CountedOracle
from .enum_instances import enum_permutations, enum_search_instances, \
    enum_q, sampling_multiplicity
from .enum_randomness import enum_randomness
from .error_bounds import bound_mu, bound_worst, rebalance_probability, \
    lemma_worst, odd_uniform_bound, hoeffding_halfwidth
from .error_pair import ErrorPair, ReductionConfig
from .error_report import ErrorReport
from .exact_error_perm import exact_error_perm
from .exact_error_search import exact_error_search
from .extend_permutation import extend_permutation
from .forward_search_oracle import forward_search_oracle, ForwardSearchOracle
from .genfunction import GeneralFunction
from .grover_iteration_count import grover_iteration_count, \
    grover_success_probability
from .grover_search import grover_search, grover_circuit
from .instance_errors import instance_error, instance_errors, \
    expected_answer
from .is_in_q import is_in_q
from .layout import Layout, nbits
from .loadinstance import loadinstance
from .mc_error import mc_error
from .mu_distribution import MuDistribution, sample_mu
from .noisy_solvers import noisy_search_solver, noisy_perm_solver
from .odd_error_combination import odd_error_combination
from .odd_n_wrapper import odd_n_wrapper, extended_solver
from .oracle_matrix import oracle_matrix
from .oracle_unitary import OracleUnitary, RelabeledOracle
from .parity_class import parity_class, instance_class
from .permutation import Permutation, identity
from .permutation_symmetrize import permutation_symmetrize
from .printreport import printreport
from .psoption import psoption
from .psver import psver
from .q_pi_neighbors import q_pi_neighbors, sample_q_pi
from .quantum_algorithm import QuantumAlgorithm, MixedQuantumAlgorithm, \
    QuantumOutcome
from .quantum_solvers import grover_perm_solver, probe_perm_solver, \
    constant_circuit
from .rand_stream import SeededStream, ExplicitStream
from .rebalance import rebalance
from .reduction_b import reduction_b, reduce_b
from .relay import relay, ask, answer
from .run_classical import run_classical
from .run_quantum import run_quantum, run_mixed
from .sample_omega_sigma import sample_omega_sigma
from .sample_uniform_in_class import sample_uniform_in_class
from .sample_uniform_permutation import sample_uniform_permutation
from .saveinstance import saveinstance
from .search_solvers import scan_search_solver, first_index_search, \
    random_guess, constant_output
from .search_to_permutation import search_to_permutation, forward_reduction
from .searchinstance import SearchInstance
from .statevector import StateVector
from .symmetrize_search import symmetrize_search
from .truncated_scan_solver import truncated_scan_solver
from .uniformity_test import uniformity_test
