#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgmatch/error.hpp"
#include "cgmatch/rng.hpp"
#include "cgmatch/util.hpp"

namespace cgmatch {

// head index of the root token
inline constexpr int kRoot = -1;

struct Token {
    std::string form;
    std::string pos;
    std::string ner;    // "None" when untagged
    int head = kRoot;   // 0-based index of the head token, or kRoot
    std::string deprel; // label of the arc to the head
};

struct EntitySpan {
    size_t begin = 0; // 0-based, inclusive
    size_t end = 0;   // 0-based, exclusive
    std::string entity_id;
};

struct DependencyParse {
    std::string id;
    std::vector<Token> tokens;
    std::vector<EntitySpan> entities;

    std::vector<std::string> forms() const {
        std::vector<std::string> out;
        out.reserve(tokens.size());
        for (const auto& t : tokens) out.push_back(t.form);
        return out;
    }
};

struct ParseCorpus {
    std::vector<std::string> deprels; // closed label set, declaration order
    std::map<std::string, DependencyParse> parses;
};

inline void validate_parse(const DependencyParse& p, const std::set<std::string>& labels) {
    const std::string where = "parse '" + p.id + "': ";
    size_t roots = 0;
    const size_t n = p.tokens.size();
    for (size_t i = 0; i < n; ++i) {
        const Token& t = p.tokens[i];
        if (t.head == kRoot) {
            ++roots;
        } else {
            if (t.head < 0 || static_cast<size_t>(t.head) >= n)
                throw ValidationError(where + "head index out of range at token " + std::to_string(i + 1));
            if (static_cast<size_t>(t.head) == i)
                throw ValidationError(where + "token " + std::to_string(i + 1) + " is its own head");
        }
        if (!labels.count(t.deprel))
            throw ValidationError(where + "deprel '" + t.deprel + "' not in declared label set");
    }
    if (roots != 1)
        throw ValidationError(where + "expected exactly one root token, found " + std::to_string(roots));
    // Every token must reach the root; a walk longer than n tokens means a cycle.
    for (size_t i = 0; i < n; ++i) {
        int cur = static_cast<int>(i);
        size_t steps = 0;
        while (cur != kRoot) {
            cur = p.tokens[cur].head;
            if (++steps > n) throw ValidationError(where + "cyclic head chain at token " + std::to_string(i + 1));
        }
    }
    std::vector<bool> covered(n, false);
    for (const auto& span : p.entities) {
        if (span.begin >= span.end || span.end > n)
            throw ValidationError(where + "entity span out of bounds for '" + span.entity_id + "'");
        for (size_t i = span.begin; i < span.end; ++i) {
            if (covered[i])
                throw ValidationError(where + "overlapping entity spans at token " + std::to_string(i + 1));
            covered[i] = true;
        }
    }
}

// Parse file layout: a file-level `#deprels a,b,c` header, then blocks
// separated by blank lines. Each block starts with `#id <string>`, may carry
// `#entities i:j entity_id` lines (1-based inclusive token range), and has
// one token per line: `index form pos ner head deprel` with head 0 = root.
inline ParseCorpus load_parses(const std::string& path) {
    ParseCorpus corpus;
    std::set<std::string> labels;
    auto lines = read_lines(path);

    DependencyParse current;
    std::vector<std::pair<size_t, size_t>> pending_spans; // 1-based inclusive as read
    std::vector<std::string> pending_ids;
    bool in_block = false;

    auto flush = [&](size_t line_no) {
        if (!in_block) return;
        if (current.id.empty()) throw ParseError(path, line_no, "block without #id line");
        if (current.tokens.empty())
            throw ParseError(path, line_no, "parse '" + current.id + "' has no tokens");
        for (size_t k = 0; k < pending_spans.size(); ++k) {
            EntitySpan span;
            span.begin = pending_spans[k].first - 1;
            span.end = pending_spans[k].second; // inclusive -> exclusive
            span.entity_id = pending_ids[k];
            current.entities.push_back(span);
        }
        validate_parse(current, labels);
        if (!corpus.parses.emplace(current.id, current).second)
            throw ParseError(path, line_no, "duplicate parse id '" + current.id + "'");
        current = DependencyParse();
        pending_spans.clear();
        pending_ids.clear();
        in_block = false;
    };

    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        const size_t no = i + 1;
        if (trim(line).empty()) {
            flush(no);
            continue;
        }
        if (line.rfind("#deprels", 0) == 0) {
            if (!corpus.deprels.empty()) throw ParseError(path, no, "repeated #deprels header");
            std::string rest = trim(line.substr(8));
            for (auto& d : split(rest, ',')) {
                std::string lab = trim(d);
                if (lab.empty()) throw ParseError(path, no, "empty dependency label");
                if (!labels.insert(lab).second)
                    throw ParseError(path, no, "duplicate dependency label '" + lab + "'");
                corpus.deprels.push_back(lab);
            }
            continue;
        }
        if (line.rfind("#id", 0) == 0) {
            if (in_block) flush(no);
            in_block = true;
            current.id = trim(line.substr(3));
            if (current.id.empty()) throw ParseError(path, no, "empty parse id");
            continue;
        }
        if (line.rfind("#entities", 0) == 0) {
            auto fields = split_ws(line.substr(9));
            if (fields.size() != 2) throw ParseError(path, no, "expected '#entities i:j entity_id'");
            auto range = split(fields[0], ':');
            if (range.size() != 2) throw ParseError(path, no, "bad span '" + fields[0] + "'");
            long long b = parse_int(range[0], path + ":" + std::to_string(no));
            long long e = parse_int(range[1], path + ":" + std::to_string(no));
            if (b < 1 || e < b) throw ParseError(path, no, "bad span bounds");
            pending_spans.emplace_back(static_cast<size_t>(b), static_cast<size_t>(e));
            pending_ids.push_back(fields[1]);
            continue;
        }
        if (line[0] == '#') continue; // comment
        if (!in_block) throw ParseError(path, no, "token line outside a parse block");
        if (corpus.deprels.empty()) throw ParseError(path, no, "missing #deprels header");
        auto fields = split(line, '\t');
        if (fields.size() != 6)
            throw ParseError(path, no, "expected 6 tab-separated token fields");
        long long idx = parse_int(fields[0], path + ":" + std::to_string(no));
        if (idx != static_cast<long long>(current.tokens.size()) + 1)
            throw ParseError(path, no, "token index out of order");
        Token t;
        t.form = fields[1];
        t.pos = fields[2];
        t.ner = fields[3];
        long long head = parse_int(fields[4], path + ":" + std::to_string(no));
        t.head = head == 0 ? kRoot : static_cast<int>(head - 1);
        t.deprel = fields[5];
        if (t.form.empty()) throw ParseError(path, no, "empty token form");
        current.tokens.push_back(std::move(t));
    }
    flush(lines.size());
    if (corpus.deprels.empty() && !corpus.parses.empty())
        throw ParseError(path, 1, "missing #deprels header");
    return corpus;
}

inline std::string serialize_parses(const ParseCorpus& corpus) {
    std::string out = "#deprels " + join(corpus.deprels, ",") + "\n\n";
    for (const auto& [id, p] : corpus.parses) {
        out += "#id " + id + "\n";
        for (const auto& span : p.entities)
            out += "#entities " + std::to_string(span.begin + 1) + ":" + std::to_string(span.end) +
                   " " + span.entity_id + "\n";
        for (size_t i = 0; i < p.tokens.size(); ++i) {
            const Token& t = p.tokens[i];
            int head = t.head == kRoot ? 0 : t.head + 1;
            out += std::to_string(i + 1) + "\t" + t.form + "\t" + t.pos + "\t" + t.ner + "\t" +
                   std::to_string(head) + "\t" + t.deprel + "\n";
        }
        out += "\n";
    }
    return out;
}

enum class OovPolicy { ZeroVector, HashedRandom };

// Word -> vector table in word2vec text format. Lookups are deterministic:
// unknown words resolve to zeros or to a hash-seeded random vector.
class EmbeddingTable {
public:
    EmbeddingTable() = default;
    EmbeddingTable(size_t dim, OovPolicy policy, uint64_t oov_seed)
        : dim_(dim), policy_(policy), oov_seed_(oov_seed) {}

    size_t dim() const { return dim_; }
    size_t size() const { return vectors_.size(); }
    OovPolicy policy() const { return policy_; }
    uint64_t oov_seed() const { return oov_seed_; }

    // Duplicate inserts keep the first occurrence.
    void insert(const std::string& word, std::vector<double> vec) {
        if (vec.size() != dim_)
            throw ShapeError("vector length " + std::to_string(vec.size()) +
                             " does not match table dim " + std::to_string(dim_));
        vectors_.emplace(word, std::move(vec));
    }

    bool contains(const std::string& word) const { return vectors_.count(word) != 0; }

    std::vector<double> lookup(const std::string& word) const {
        auto it = vectors_.find(word);
        if (it != vectors_.end()) return it->second;
        if (policy_ == OovPolicy::ZeroVector) return std::vector<double>(dim_, 0.0);
        Rng rng(fnv1a(word) ^ (oov_seed_ * 0x9e3779b97f4a7c15ULL));
        std::vector<double> v(dim_);
        for (size_t i = 0; i < dim_; ++i) v[i] = rng.uniform(-0.5, 0.5);
        return v;
    }

    const std::map<std::string, std::vector<double>>& vectors() const { return vectors_; }

    bool operator==(const EmbeddingTable& other) const {
        return dim_ == other.dim_ && vectors_ == other.vectors_;
    }

private:
    size_t dim_ = 0;
    std::map<std::string, std::vector<double>> vectors_;
    OovPolicy policy_ = OovPolicy::ZeroVector;
    uint64_t oov_seed_ = 0;
};

// word2vec text format: header `count dim`, then `word v1 ... vdim` rows.
inline EmbeddingTable load_embeddings(const std::string& path,
                                      OovPolicy policy = OovPolicy::ZeroVector,
                                      uint64_t oov_seed = 0) {
    auto lines = read_lines(path);
    if (lines.empty()) throw ParseError(path, 1, "missing header line");
    auto header = split_ws(lines[0]);
    if (header.size() != 2) throw ParseError(path, 1, "header must be 'count dim'");
    long long count = parse_int(header[0], path + ":1");
    long long dim = parse_int(header[1], path + ":1");
    if (count < 0 || dim <= 0) throw ParseError(path, 1, "bad header values");

    EmbeddingTable table(static_cast<size_t>(dim), policy, oov_seed);
    size_t rows = 0;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        auto fields = split_ws(lines[i]);
        if (fields.size() != static_cast<size_t>(dim) + 1)
            throw ParseError(path, i + 1, "expected word plus " + std::to_string(dim) + " values");
        std::vector<double> vec(static_cast<size_t>(dim));
        for (size_t j = 0; j < vec.size(); ++j)
            vec[j] = parse_double(fields[j + 1], path + ":" + std::to_string(i + 1));
        table.insert(fields[0], std::move(vec));
        ++rows;
    }
    if (rows != static_cast<size_t>(count))
        throw ParseError(path, 1, "header declares " + std::to_string(count) + " rows, found " +
                                      std::to_string(rows));
    return table;
}

inline void save_embeddings(const EmbeddingTable& table, const std::string& path) {
    std::string out = std::to_string(table.size()) + " " + std::to_string(table.dim()) + "\n";
    for (const auto& [word, vec] : table.vectors()) {
        out += word;
        for (double v : vec) out += " " + format_double(v);
        out += "\n";
    }
    write_file(path, out);
}

// Element-wise mean of the word vectors, OOV resolved by the table policy.
inline std::vector<double> phrase_embedding(const EmbeddingTable& table,
                                            const std::vector<std::string>& words) {
    if (words.empty()) throw ArgumentError("phrase_embedding requires a non-empty word list");
    std::vector<double> sum(table.dim(), 0.0);
    for (const auto& w : words) {
        auto v = table.lookup(w);
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
    }
    for (double& x : sum) x /= static_cast<double>(words.size());
    return sum;
}

} // namespace cgmatch
