# Copyright 2026 The bangla-ged Authors.
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

"""Python bindings for the bged post-processing and scoring library."""

from ._core import (
    AlignmentFailed,
    BgedError,
    CharLookupTable,
    MarkedSentence,
    Mismatch,
    RuleSet,
    Span,
    apply_p2,
    build_lookup,
    char_correct,
    count_markers,
    degrade,
    levenshtein,
    mine_common_errors,
    normalize,
    parse_marked,
    reconcile,
    regex_correction,
    run_pipeline,
    split_report,
    strip_markers,
    synth_corpus,
    variants,
    word_correct,
)

__all__ = [
    "AlignmentFailed",
    "BgedError",
    "CharLookupTable",
    "MarkedSentence",
    "Mismatch",
    "RuleSet",
    "Span",
    "apply_p2",
    "build_lookup",
    "char_correct",
    "count_markers",
    "degrade",
    "levenshtein",
    "mine_common_errors",
    "normalize",
    "parse_marked",
    "reconcile",
    "regex_correction",
    "run_pipeline",
    "split_report",
    "strip_markers",
    "synth_corpus",
    "variants",
    "word_correct",
]
