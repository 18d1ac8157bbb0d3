#include "graph_spec.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace wlp {

namespace {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    Graph parse() {
        Graph g = parse_spec(/*depth=*/0);
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input after the graph description");
        return g;
    }

private:
    Graph parse_spec(int depth) {
        std::string head = next_word();
        if (head == "path") return path(next_int("path length"));
        if (head == "cycle") return cycle(next_int("cycle length"));
        if (head == "pan") return pan(next_int("pan cycle length"));
        if (head == "tadpole") {
            int m = next_int("tadpole cycle length");
            int n = next_int("tadpole tail length");
            return tadpole(m, n);
        }
        if (head == "union") {
            Graph a = parse_group(depth);
            Graph b = parse_group(depth);
            return disjoint_union(a, b);
        }
        if (head == "edges") return read_edge_list_file(rest_as_path(depth));
        fail(head.empty() ? "empty graph description"
                          : "unknown graph kind '" + head + "'");
    }

    Graph parse_group(int depth) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '(')
            fail("expected '(' opening a union operand");
        ++pos_;
        Graph g = parse_spec(depth + 1);
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ')')
            fail("expected ')' closing a union operand");
        ++pos_;
        return g;
    }

    // Filename operand: everything up to the enclosing ')' (or the end of
    // the input at top level), with surrounding whitespace trimmed.
    std::string rest_as_path(int depth) {
        skip_ws();
        size_t end = depth > 0 ? text_.find(')', pos_) : std::string::npos;
        if (end == std::string::npos) end = text_.size();
        size_t last = end;
        while (last > pos_ && std::isspace(static_cast<unsigned char>(
                                  text_[last - 1])))
            --last;
        if (last == pos_) fail("missing filename after 'edges'");
        std::string out = text_.substr(pos_, last - pos_);
        pos_ = end;
        return out;
    }

    std::string next_word() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(
                                          text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')')
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    int next_int(const char* what) {
        std::string word = next_word();
        if (word.empty() || word.find_first_not_of("0123456789") !=
                                std::string::npos)
            fail(std::string("expected a nonnegative integer for the ") +
                 what);
        try {
            return std::stoi(word);
        } catch (const std::out_of_range&) {
            fail(std::string("value out of range for the ") + what);
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("bad graph spec: " + why + " (in \"" +
                                    text_ + "\")");
    }

    const std::string& text_;
    size_t pos_ = 0;
};

} // namespace

Graph parse_graph_spec(const std::string& spec) {
    return SpecParser(spec).parse();
}

} // namespace wlp
