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

#include "voirie/lexicon/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "voirie/error.hpp"

namespace voirie::lexicon {

namespace {

using json = nlohmann::json;

// ASCII-only case folding; accented characters are left untouched.
std::string fold(const std::string& word) {
    std::string out = word;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

const char* kind_name(NodeKind kind) {
    return kind == NodeKind::space ? "space" : "object";
}

NodeKind kind_from_string(const std::string& s, const std::string& where) {
    if (s == "space") return NodeKind::space;
    if (s == "object") return NodeKind::object;
    throw Error(ErrorKind::schema, where + ": unknown kind \"" + s + "\"");
}

}  // namespace

Lexicon Lexicon::from_nodes(std::vector<LexiconNode> nodes, std::string version) {
    if (nodes.empty()) {
        throw Error(ErrorKind::structure, "lexicon holds no nodes");
    }

    Lexicon lex;
    lex.nodes_ = std::move(nodes);
    lex.version_ = std::move(version);

    for (std::size_t i = 0; i < lex.nodes_.size(); ++i) {
        const LexiconNode& node = lex.nodes_[i];
        if (node.term.empty()) {
            throw Error(ErrorKind::structure, "node with empty canonical term");
        }
        if (!lex.by_term_.emplace(node.term, i).second) {
            throw Error(ErrorKind::duplicate_id, "duplicate canonical term \"" + node.term + "\"");
        }
    }

    for (const LexiconNode& node : lex.nodes_) {
        if (node.parent) {
            const auto it = lex.by_term_.find(*node.parent);
            if (it == lex.by_term_.end()) {
                throw Error(ErrorKind::structure, "node \"" + node.term + "\" references unknown parent \"" +
                                                      *node.parent + "\"");
            }
            const LexiconNode& parent = lex.nodes_[it->second];
            if (parent.kind != node.kind) {
                throw Error(ErrorKind::structure,
                            "node \"" + node.term + "\" (" + kind_name(node.kind) +
                                ") cannot have " + kind_name(parent.kind) + " parent \"" +
                                parent.term + "\"");
            }
            if (node.rank != parent.rank + 1) {
                throw Error(ErrorKind::rank, "node \"" + node.term + "\" has rank " +
                                                 std::to_string(node.rank) + " under parent of rank " +
                                                 std::to_string(parent.rank));
            }
        } else if (node.rank != 1) {
            throw Error(ErrorKind::rank,
                        "root node \"" + node.term + "\" must have rank 1, has " +
                            std::to_string(node.rank));
        }
        if (node.kind == NodeKind::object && (node.rank < 1 || node.rank > 2)) {
            throw Error(ErrorKind::rank,
                        "object node \"" + node.term + "\" must have rank 1 or 2");
        }
        if (node.rank < 1) {
            throw Error(ErrorKind::rank, "node \"" + node.term + "\" has rank < 1");
        }
    }

    // Parent links are validated; a cycle would keep a walk from reaching a
    // root within the node count.
    for (const LexiconNode& node : lex.nodes_) {
        const LexiconNode* cursor = &node;
        std::size_t steps = 0;
        while (cursor->parent) {
            cursor = &lex.nodes_[lex.by_term_.at(*cursor->parent)];
            if (++steps > lex.nodes_.size()) {
                throw Error(ErrorKind::structure,
                            "cycle through node \"" + node.term + "\"");
            }
        }
    }

    for (std::size_t i = 0; i < lex.nodes_.size(); ++i) {
        for (const std::string& synonym : lex.nodes_[i].synonyms) {
            lex.by_synonym_[fold(synonym)].push_back(i);
        }
    }
    for (const auto& [word, indices] : lex.by_synonym_) {
        if (indices.size() < 2) continue;
        for (std::size_t i : indices) {
            if (!lex.nodes_[i].ambiguous) {
                throw Error(ErrorKind::duplicate_id,
                            "synonym \"" + word + "\" maps to several nodes but \"" +
                                lex.nodes_[i].term + "\" is not flagged ambiguous");
            }
        }
    }
    return lex;
}

const LexiconNode& Lexicon::node(const std::string& term) const {
    const auto it = by_term_.find(term);
    if (it == by_term_.end()) {
        throw Error(ErrorKind::unknown_term, "unknown term \"" + term + "\"");
    }
    return nodes_[it->second];
}

bool Lexicon::contains(const std::string& term) const noexcept {
    return by_term_.count(term) > 0;
}

std::vector<std::string> Lexicon::ancestry(const std::string& term) const {
    std::vector<std::string> path;
    const LexiconNode* cursor = &node(term);
    path.push_back(cursor->term);
    while (cursor->parent) {
        cursor = &nodes_[by_term_.at(*cursor->parent)];
        path.push_back(cursor->term);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

ResolveResult Lexicon::resolve(const std::string& word) const {
    if (const auto it = by_term_.find(word); it != by_term_.end()) {
        return ResolveResult{nodes_[it->second].term, {}};
    }
    const auto it = by_synonym_.find(fold(word));
    if (it == by_synonym_.end()) {
        throw Error(ErrorKind::unknown_term, "unknown word \"" + word + "\"");
    }
    const std::vector<std::size_t>& indices = it->second;
    if (indices.size() == 1) {
        return ResolveResult{nodes_[indices.front()].term, {}};
    }
    ResolveResult report;
    report.candidates.reserve(indices.size());
    for (std::size_t i : indices) {
        report.candidates.push_back(SenseCandidate{nodes_[i].term, nodes_[i].definition});
    }
    return report;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::structure, path.string() + ": invalid JSON: " + e.what());
    }

    std::string version;
    const json* node_array = nullptr;
    if (doc.is_array()) {
        node_array = &doc;
        version = "unversioned";
    } else if (doc.is_object() && doc.contains("nodes") && doc["nodes"].is_array()) {
        node_array = &doc["nodes"];
        version = doc.value("version", "unversioned");
    } else {
        throw Error(ErrorKind::structure,
                    path.string() + ": lexicon must be a node array or {version, nodes}");
    }

    std::vector<LexiconNode> nodes;
    nodes.reserve(node_array->size());
    for (std::size_t i = 0; i < node_array->size(); ++i) {
        const json& entry = (*node_array)[i];
        const std::string where = path.string() + ": nodes[" + std::to_string(i) + "]";
        if (!entry.is_object() || !entry.contains("term") || !entry["term"].is_string()) {
            throw Error(ErrorKind::schema, where + ": missing \"term\"");
        }
        LexiconNode node;
        node.term = entry["term"].get<std::string>();
        node.kind = kind_from_string(entry.value("kind", "space"), where);
        if (!entry.contains("rank") || !entry["rank"].is_number_integer()) {
            throw Error(ErrorKind::schema, where + ": missing integer \"rank\"");
        }
        node.rank = entry["rank"].get<int>();
        if (entry.contains("parent") && entry["parent"].is_string()) {
            node.parent = entry["parent"].get<std::string>();
        }
        node.definition = entry.value("definition", "");
        if (entry.contains("synonyms")) {
            if (!entry["synonyms"].is_array()) {
                throw Error(ErrorKind::schema, where + ": synonyms must be an array");
            }
            for (const json& s : entry["synonyms"]) {
                if (!s.is_string()) {
                    throw Error(ErrorKind::schema, where + ": synonyms must be strings");
                }
                node.synonyms.push_back(s.get<std::string>());
            }
        }
        node.ambiguous = entry.value("ambiguous", false);
        if (entry.contains("note") && entry["note"].is_string()) {
            node.note = entry["note"].get<std::string>();
        }
        nodes.push_back(std::move(node));
    }
    return Lexicon::from_nodes(std::move(nodes), std::move(version));
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
    json nodes = json::array();
    for (const LexiconNode& node : lexicon.nodes()) {
        json entry{{"term", node.term},
                   {"kind", kind_name(node.kind)},
                   {"rank", node.rank},
                   {"definition", node.definition}};
        if (node.parent) entry["parent"] = *node.parent;
        if (!node.synonyms.empty()) entry["synonyms"] = node.synonyms;
        if (node.ambiguous) entry["ambiguous"] = true;
        if (node.note) entry["note"] = *node.note;
        nodes.push_back(std::move(entry));
    }
    const json doc{{"version", lexicon.version()}, {"nodes", std::move(nodes)}};

    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::io, "cannot write " + path.string());
    }
    out << doc.dump(2) << "\n";
}

}  // namespace voirie::lexicon
