// Copyright 2026 The Voirie Authors
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

#ifndef VOIRIE_LEXICON_LEXICON_HPP
#define VOIRIE_LEXICON_LEXICON_HPP

/// @file lexicon.hpp
/// Controlled vocabulary of road-space terms, organized as a ranked forest.
///
/// Terms are either *spaces* (areal parts of the right-of-way: Assiette,
/// Chaussée, Trottoir, ...) or *objects* (equipment standing on them).
/// Space ranks grow by exactly one per tree level; object nodes live on
/// two levels only.  Synonyms resolve words to canonical terms; a word
/// carried by several nodes is a known ambiguity ("voirie") and resolves
/// to an explicit report instead of a term, so the choice of sense is
/// always the user's.
///
/// The lexicon is immutable after load and freely shared across threads.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace voirie::lexicon {

enum class NodeKind { space, object };

struct LexiconNode {
    std::string term;  ///< canonical form, unique in the lexicon
    NodeKind kind = NodeKind::space;
    int rank = 1;
    std::optional<std::string> parent;  ///< canonical term of the parent
    std::string definition;
    std::vector<std::string> synonyms;
    /// Marks a node that participates in a known multi-sense word: a
    /// synonym may map to several nodes only when all of them carry this.
    bool ambiguous = false;
    /// Free-text source note (e.g. spelling normalization).
    std::optional<std::string> note;
};

struct SenseCandidate {
    std::string term;
    std::string definition;
};

/// Either a canonical term or the list of candidate senses for an
/// ambiguous word.
struct ResolveResult {
    std::optional<std::string> canonical;
    std::vector<SenseCandidate> candidates;

    [[nodiscard]] bool ambiguous() const noexcept { return !canonical.has_value(); }
};

class Lexicon {
public:
    /// Validates the node set: unique canonical terms, existing parents of
    /// the same kind, rank arithmetic, no cycles, synonym collisions only
    /// between ambiguous-flagged nodes.
    /// @throws Error{structure|rank|duplicate_id}
    static Lexicon from_nodes(std::vector<LexiconNode> nodes, std::string version);

    [[nodiscard]] const std::vector<LexiconNode>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::string& version() const noexcept { return version_; }

    /// @throws Error{unknown_term}
    [[nodiscard]] const LexiconNode& node(const std::string& term) const;
    [[nodiscard]] bool contains(const std::string& term) const noexcept;

    /// Path of canonical terms from the root down to `term` (inclusive).
    /// For space nodes its size equals the node's rank.
    /// @throws Error{unknown_term}
    [[nodiscard]] std::vector<std::string> ancestry(const std::string& term) const;

    /// Resolves a word: canonical forms map to themselves, unique synonyms
    /// to their node's term, multi-sense words to an ambiguity report.
    /// Synonym matching is case-insensitive (ASCII).
    /// @throws Error{unknown_term} when the word is not in the lexicon.
    [[nodiscard]] ResolveResult resolve(const std::string& word) const;

private:
    Lexicon() = default;

    std::vector<LexiconNode> nodes_;
    std::string version_;
    std::map<std::string, std::size_t> by_term_;
    std::map<std::string, std::vector<std::size_t>> by_synonym_;  // case-folded
};

/// Loads either the object form {"version": ..., "nodes": [...]} or a bare
/// array of node objects {term, kind, rank, parent, definition, synonyms[],
/// ambiguous?}.
/// @throws Error{structure|rank|duplicate_id|schema|io}
Lexicon load_lexicon(const std::filesystem::path& path);

/// Writes the object form; load(save(lex)) yields an identical node set.
void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);

}  // namespace voirie::lexicon

#endif  // VOIRIE_LEXICON_LEXICON_HPP
