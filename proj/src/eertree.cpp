#include "richwords/eertree.hpp"

#include <cassert>
#include <stdexcept>

namespace richwords {

Eertree::Eertree(int alphabet_size) : alphabet_size_(alphabet_size) {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
        throw std::invalid_argument("eertree: unsupported alphabet size");
    }
    // Node 0: length -1 root; node 1: length 0 root.  Created nodes have
    // indices >= 2, so 0 doubles as "no transition".
    nodes_.push_back(Node{-1, 0, {0, 0, 0}});
    nodes_.push_back(Node{0, 0, {0, 0, 0}});
}

std::int32_t Eertree::find_extension(std::int32_t node, Symbol s) const {
    const auto n = static_cast<std::ptrdiff_t>(word_.size());
    while (true) {
        std::ptrdiff_t pos = n - 2 - nodes_[node].len;
        if (pos >= 0 && word_[static_cast<std::size_t>(pos)] == s) return node;
        node = nodes_[node].suffix_link;
    }
}

bool Eertree::push(Symbol s) {
    assert(s < alphabet_size_);
    word_.push_back(s);
    std::int32_t base = find_extension(active_, s);
    std::int32_t& slot = nodes_[base].next[s];
    if (slot != 0) {
        journal_.push_back(UndoRecord{active_, -1, s});
        active_ = slot;
        return false;
    }
    Node node;
    node.len = nodes_[base].len + 2;
    node.next = {0, 0, 0};
    if (node.len == 1) {
        node.suffix_link = 1;
    } else {
        std::int32_t t = find_extension(nodes_[base].suffix_link, s);
        node.suffix_link = nodes_[t].next[s];
        assert(node.suffix_link != 0);
    }
    nodes_.push_back(node);
    auto id = static_cast<std::int32_t>(nodes_.size() - 1);
    nodes_[base].next[s] = id;
    journal_.push_back(UndoRecord{active_, base, s});
    active_ = id;
    return true;
}

void Eertree::pop() {
    if (journal_.empty()) throw std::logic_error("eertree: nothing to pop");
    UndoRecord rec = journal_.back();
    journal_.pop_back();
    if (rec.created_from >= 0) {
        nodes_[rec.created_from].next[rec.created_symbol] = 0;
        nodes_.pop_back();
    }
    active_ = rec.previous_active;
    word_.pop_back();
}

void Eertree::rollback(std::size_t length) {
    if (length > word_.size()) throw std::logic_error("eertree: rollback beyond current length");
    while (word_.size() > length) pop();
}

bool is_rich(const Word& w) {
    Eertree tree(w.alphabet_size());
    for (Symbol s : w.symbols()) {
        if (!tree.push(s)) return false;
    }
    return true;
}

RichnessReport richness_report(const Word& w) {
    RichnessReport report;
    report.word_length = w.size();
    Eertree tree(w.alphabet_size());
    std::size_t position = 0;
    for (Symbol s : w.symbols()) {
        ++position;
        if (!tree.push(s)) {
            ++report.defect;
            if (!report.first_defect_position) report.first_defect_position = position;
        }
    }
    report.distinct_palindromes = tree.palindrome_count();
    return report;
}

}  // namespace richwords
