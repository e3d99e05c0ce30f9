#include "fanforge/graph6.hpp"

#include <algorithm>

namespace fanforge {

namespace {

constexpr int kBias = 63;

void append_number(std::string& out, int n) {
    if (n < 0) throw graph6_error("negative order", 0);
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw graph6_error("order too large for this tool", 0);
    }
}

int read_number(const std::string& s, std::size_t& pos) {
    auto need = [&](std::size_t k) {
        if (pos + k > s.size()) throw graph6_error("truncated order field", pos);
    };
    auto val = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw graph6_error("byte out of range", i);
        return c - kBias;
    };
    need(1);
    if (static_cast<unsigned char>(s[pos]) != 126) return val(pos++);
    ++pos;
    need(1);
    if (static_cast<unsigned char>(s[pos]) == 126)
        throw graph6_error("order too large for this tool", pos);
    need(3);
    int n = (val(pos) << 12) | (val(pos + 1) << 6) | val(pos + 2);
    pos += 3;
    return n;
}

class BitWriter {
public:
    void push(int bit) {
        cur_ = (cur_ << 1) | (bit & 1);
        if (++fill_ == 6) flush_group();
    }
    void push_bits(unsigned value, int width) {
        for (int i = width - 1; i >= 0; --i) push((value >> i) & 1);
    }
    int pending() const { return fill_; }
    std::string finish(int pad_bit, int special_first_zero = 0) {
        bool first = true;
        while (fill_ != 0) {
            push(special_first_zero && first ? 0 : pad_bit);
            first = false;
        }
        return out_;
    }

private:
    void flush_group() {
        out_.push_back(static_cast<char>(cur_ + kBias));
        cur_ = 0;
        fill_ = 0;
    }
    std::string out_;
    unsigned cur_ = 0;
    int fill_ = 0;
};

class BitReader {
public:
    BitReader(const std::string& s, std::size_t pos) : s_(s), pos_(pos) {}
    std::size_t bits_left() const { return (s_.size() - pos_) * 6 - used_; }
    int read_bit() {
        unsigned char c = static_cast<unsigned char>(s_[pos_]);
        if (c < 63 || c > 126) throw graph6_error("byte out of range", pos_);
        int bit = (c - kBias) >> (5 - used_) & 1;
        if (++used_ == 6) {
            used_ = 0;
            ++pos_;
        }
        return bit;
    }
    unsigned read_bits(int width) {
        unsigned v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | read_bit();
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_;
    int used_ = 0;
};

std::string strip_header(const std::string& line) {
    const std::string g6 = ">>graph6<<";
    const std::string s6 = ">>sparse6<<";
    if (line.rfind(g6, 0) == 0) return line.substr(g6.size());
    if (line.rfind(s6, 0) == 0) return line.substr(s6.size());
    return line;
}

int sparse6_field_width(int n) {
    int k = 0;
    while ((n - 1) >> k) ++k;
    return std::max(k, 1);
}

} // namespace

std::string encode_graph6(const Multigraph& g) {
    if (!g.is_simple()) throw precondition_error("graph6 encodes simple graphs only");
    int n = g.vertex_count();
    std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    std::string out;
    append_number(out, n);
    BitWriter bw;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bw.push(g.adjacent(order[i], order[j]) ? 1 : 0);
    out += bw.finish(0);
    return out;
}

Multigraph decode_graph6(const std::string& raw) {
    std::string line = strip_header(raw);
    std::size_t pos = 0;
    int n = read_number(line, pos);
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t bytes = (bits + 5) / 6;
    if (line.size() - pos != bytes)
        throw graph6_error("graph6 body has wrong length", pos);
    Multigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    BitReader br(line, pos);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (br.read_bit()) g.add_edge(i, j);
    return g;
}

std::string encode_sparse6(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[order[i]] = i;

    std::vector<std::pair<int, int>> edges; // (max, min) endpoint indices
    for (const auto& [e, p] : g.edges()) {
        int a = index[p.u], b = index[p.v];
        edges.emplace_back(std::max(a, b), std::min(a, b));
    }
    std::sort(edges.begin(), edges.end());

    std::string out = ":";
    append_number(out, n);
    int k = sparse6_field_width(n);
    BitWriter bw;
    int v = 0;
    for (auto [w, u] : edges) {
        if (w == v) {
            bw.push(0);
            bw.push_bits(static_cast<unsigned>(u), k);
        } else if (w == v + 1) {
            v = w;
            bw.push(1);
            bw.push_bits(static_cast<unsigned>(u), k);
        } else {
            v = w;
            bw.push(1);
            bw.push_bits(static_cast<unsigned>(w), k);
            bw.push(0);
            bw.push_bits(static_cast<unsigned>(u), k);
        }
    }
    // padding is 1-bits; the power-of-two corner case must lead with a 0 so
    // the pad cannot be read back as a loop at vertex n-1
    int pad = bw.pending() == 0 ? 0 : 6 - bw.pending();
    bool power_of_two = n >= 2 && (n & (n - 1)) == 0;
    int lead_zero = (power_of_two && pad >= k + 1 && v == n - 2) ? 1 : 0;
    out += bw.finish(1, lead_zero);
    return out;
}

Multigraph decode_sparse6(const std::string& raw) {
    std::string line = strip_header(raw);
    if (line.empty() || line[0] != ':') throw graph6_error("sparse6 line must start with ':'", 0);
    std::size_t pos = 1;
    int n = read_number(line, pos);
    Multigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    if (n == 0) return g;
    int k = sparse6_field_width(n);
    BitReader br(line, pos);
    int v = 0;
    while (br.bits_left() >= static_cast<std::size_t>(k) + 1) {
        int b = br.read_bit();
        int x = static_cast<int>(br.read_bits(k));
        if (b) ++v;
        if (v >= n) break;
        if (x > v) {
            v = x;
            if (v >= n) break;
        } else {
            g.add_edge(x, v);
        }
    }
    return g;
}

Multigraph decode_graph_line(const std::string& raw) {
    std::string line = strip_header(raw);
    if (!line.empty() && line[0] == ':') return decode_sparse6(line);
    return decode_graph6(line);
}

} // namespace fanforge
