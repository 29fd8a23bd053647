#include "locallex/earley.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace locallex {

namespace {

std::vector<std::uint32_t> dotted_offsets(const Grammar& g, std::uint32_t& total)
{
    std::vector<std::uint32_t> offset;
    total = 0;
    for (const Rule& r : g.rules()) {
        offset.push_back(total);
        total += static_cast<std::uint32_t>(r.rhs.size() + 1);
    }
    return offset;
}

// Items of one chart under construction. Bin j holds (rule, dot, origin) with
// origin <= j; membership is a bitmap over dotted rules x origins.
class Bins {
public:
    Bins(const Grammar& g, std::size_t n) : g_(g), bins_(n + 1), seen_(n + 1)
    {
        offset_ = dotted_offsets(g, dotted_);
        for (std::size_t j = 0; j <= n; ++j)
            seen_[j].assign(static_cast<std::size_t>(dotted_) * (j + 1), 0);
    }

    bool add(std::size_t j, std::uint32_t rule, std::uint32_t dot, std::uint32_t origin)
    {
        if (j >= bins_.size())
            throw std::logic_error("item beyond the end of the input");
        auto& bit = seen_[j][static_cast<std::size_t>(offset_[rule] + dot) * (j + 1) + origin];
        if (bit)
            return false;
        bit = 1;
        bins_[j].push_back(make_item(rule, dot, origin, j));
        ++size_;
        return true;
    }

    // Predict/complete closure of bin k; items waiting on a terminal are handed
    // to `on_terminal`, which may add items to bin k or later bins.
    template <class OnTerminal>
    void close(std::size_t k, OnTerminal&& on_terminal)
    {
        auto& bin = bins_[k];
        std::vector<bool> nulled(g_.symbol_count(), false);
        for (std::size_t idx = 0; idx < bin.size(); ++idx) {
            const Item item = bin[idx];
            const Rule& r = g_.rule(item.rule);
            if (item.dot == r.rhs.size()) {
                if (item.origin == k)
                    nulled[r.lhs] = true;
                const auto& from = bins_[item.origin];
                for (std::size_t w = 0; w < from.size(); ++w) {
                    const Item waiting = from[w];
                    const Rule& wr = g_.rule(waiting.rule);
                    if (waiting.dot < wr.rhs.size() && wr.rhs[waiting.dot] == r.lhs)
                        add(k, waiting.rule, waiting.dot + 1, waiting.origin);
                }
                continue;
            }
            SymbolId next = r.rhs[item.dot];
            if (g_.is_nonterminal(next)) {
                for (std::size_t ri : g_.rules_for(next))
                    add(k, static_cast<std::uint32_t>(ri), 0, static_cast<std::uint32_t>(k));
                if (nulled[next])
                    add(k, item.rule, item.dot + 1, item.origin);
            } else {
                on_terminal(item, next);
            }
        }
    }

    std::vector<std::vector<Item>>& bins() { return bins_; }
    std::vector<std::vector<std::uint8_t>>& seen() { return seen_; }
    const std::vector<std::uint32_t>& offsets() const { return offset_; }
    std::uint32_t dotted() const { return dotted_; }
    std::size_t size() const { return size_; }

private:
    const Grammar& g_;
    std::vector<std::vector<Item>> bins_;
    std::vector<std::vector<std::uint8_t>> seen_;
    std::vector<std::uint32_t> offset_;
    std::uint32_t dotted_ = 0;
    std::size_t size_ = 0;
};

std::string quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
            out += buf;
        } else {
            out += c;
        }
    }
    return out + "\"";
}

} // namespace

std::string format_item(const Grammar& g, const Item& item)
{
    return "(" + g.rule_string(item.rule, item.dot) + ", " + std::to_string(item.origin) + ", " +
           std::to_string(item.bin) + ")";
}

Chart compute_chart(const Grammar& g, const Lexer& lexer, const Selector& sel, std::string_view input)
{
    const std::size_t n = input.size();
    Bins bins(g, n);
    Chart chart;
    chart.input_ = std::string(input);
    chart.tokens_.resize(n + 1);
    chart.rounds_.assign(n + 1, 0);

    for (std::size_t ri : g.rules_for(g.start()))
        bins.add(0, static_cast<std::uint32_t>(ri), 0, 0);

    // Selected tokens of the current position, grouped by terminal as lengths.
    std::vector<std::vector<std::size_t>> by_terminal(g.terminal_count());
    auto scan_with = [&](std::size_t k) {
        return [&, k](const Item& item, SymbolId terminal) {
            for (std::size_t len : by_terminal[terminal])
                bins.add(k + len, item.rule, item.dot + 1, item.origin);
        };
    };

    std::vector<bool> expected(g.terminal_count());
    for (std::size_t k = 0; k <= n; ++k) {
        for (auto& v : by_terminal)
            v.clear();
        // J_k^0 = π_k ∅ I_{k-1}
        bins.close(k, [](const Item&, SymbolId) {});

        TokenSet selected;
        for (;;) {
            // T_k^{u+1} = Sel(T_k^u, candidates of J_k^u)
            std::fill(expected.begin(), expected.end(), false);
            for (const Item& item : bins.bins()[k]) {
                const Rule& r = g.rule(item.rule);
                if (item.dot < r.rhs.size() && g.is_terminal(r.rhs[item.dot]))
                    expected[r.rhs[item.dot]] = true;
            }
            TokenSet candidates = selected;
            for (SymbolId t = 0; t < g.terminal_count(); ++t)
                if (expected[t])
                    lexer.lex_into(t, input, k, candidates);
            TokenSet next = sel.select(selected, candidates);
            ++chart.rounds_[k];

            for (auto& v : by_terminal)
                v.clear();
            for (const Token& tok : next) {
                if (k + tok.size() > n)
                    throw std::logic_error("lexer returned a token beyond the end of the input");
                by_terminal[tok.terminal].push_back(tok.size());
            }
            selected = std::move(next);

            // J_k^{u+1} = π_k T_k^{u+1} J_k^u; stop once nothing changes.
            const std::size_t before = bins.size();
            bins.close(k, scan_with(k));
            if (bins.size() == before)
                break;
        }
        chart.tokens_[k] = std::move(selected);
    }

    chart.size_ = bins.size();
    chart.dotted_offset_ = bins.offsets();
    chart.dotted_count_ = bins.dotted();
    chart.seen_ = std::move(bins.seen());
    chart.bins_ = std::move(bins.bins());
    for (auto& bin : chart.bins_)
        std::ranges::sort(bin);
    for (const Item& item : chart.bins_[n]) {
        const Rule& r = g.rule(item.rule);
        if (item.origin == 0 && r.lhs == g.start() && item.dot == r.rhs.size())
            chart.accepted_ = true;
    }
    return chart;
}

bool Chart::contains(const Item& item) const
{
    if (item.bin >= bins_.size() || item.origin > item.bin || item.rule >= dotted_offset_.size())
        return false;
    std::uint32_t next_offset =
        item.rule + 1 < dotted_offset_.size() ? dotted_offset_[item.rule + 1] : dotted_count_;
    if (dotted_offset_[item.rule] + item.dot >= next_offset)
        return false;
    return seen_[item.bin][static_cast<std::size_t>(dotted_offset_[item.rule] + item.dot) * (item.bin + 1) +
                           item.origin] != 0;
}

ItemSet Chart::items() const
{
    ItemSet out;
    for (const auto& bin : bins_)
        out.insert(bin.begin(), bin.end());
    return out;
}

bool recognize(const Grammar& g, const Lexer& lexer, const Selector& sel, std::string_view input)
{
    return compute_chart(g, lexer, sel, input).accepted();
}

std::size_t item_bound(const Grammar& g, std::size_t n)
{
    std::size_t dotted = 0;
    for (const Rule& r : g.rules())
        dotted += 1 + r.rhs.size();
    return ((n + 1) * n / 2 + n + 1) * dotted;
}

std::string dump_chart(const Grammar& g, const Chart& chart)
{
    std::string out;
    for (std::size_t j = 0; j < chart.bin_count(); ++j)
        for (const Item& item : chart.bin(j))
            out += std::to_string(j) + "\t" + g.rule_string(item.rule, item.dot) + "\t" +
                   std::to_string(item.origin) + "\n";
    for (std::size_t k = 0; k < chart.bin_count(); ++k)
        for (const Token& t : canonical_tokens(g, chart.tokens(k)))
            out += std::to_string(k) + "\t" + g.name(t.terminal) + "\t" + quote(t.chars) + "\n";
    return out;
}

// PrefixRecognizer

PrefixRecognizer::PrefixRecognizer(const Grammar& g) : g_(&g)
{
    dotted_offset_ = dotted_offsets(g, dotted_count_);
    sets_.emplace_back();
    seen_.emplace_back(dotted_count_, 0);
    for (std::size_t ri : g.rules_for(g.start()))
        add(0, static_cast<std::uint32_t>(ri), 0, 0);
    close(0);
}

bool PrefixRecognizer::add(std::size_t j, std::uint32_t rule, std::uint32_t dot, std::uint32_t origin)
{
    auto& bit = seen_[j][static_cast<std::size_t>(dotted_offset_[rule] + dot) * (j + 1) + origin];
    if (bit)
        return false;
    bit = 1;
    sets_[j].push_back({rule, dot, origin});
    return true;
}

void PrefixRecognizer::close(std::size_t j)
{
    const Grammar& g = *g_;
    std::vector<bool> nulled(g.symbol_count(), false);
    for (std::size_t idx = 0; idx < sets_[j].size(); ++idx) {
        const Entry e = sets_[j][idx];
        const Rule& r = g.rule(e.rule);
        if (e.dot == r.rhs.size()) {
            if (e.origin == j)
                nulled[r.lhs] = true;
            for (std::size_t w = 0; w < sets_[e.origin].size(); ++w) {
                const Entry waiting = sets_[e.origin][w];
                const Rule& wr = g.rule(waiting.rule);
                if (waiting.dot < wr.rhs.size() && wr.rhs[waiting.dot] == r.lhs)
                    add(j, waiting.rule, waiting.dot + 1, waiting.origin);
            }
            continue;
        }
        SymbolId next = r.rhs[e.dot];
        if (g.is_nonterminal(next)) {
            for (std::size_t ri : g.rules_for(next))
                add(j, static_cast<std::uint32_t>(ri), 0, static_cast<std::uint32_t>(j));
            if (nulled[next])
                add(j, e.rule, e.dot + 1, e.origin);
        }
    }
}

bool PrefixRecognizer::push(SymbolId terminal)
{
    const std::size_t j = sets_.size();
    sets_.emplace_back();
    seen_.emplace_back(static_cast<std::size_t>(dotted_count_) * (j + 1), 0);
    for (const Entry& e : sets_[j - 1]) {
        const Rule& r = g_->rule(e.rule);
        if (e.dot < r.rhs.size() && r.rhs[e.dot] == terminal)
            add(j, e.rule, e.dot + 1, e.origin);
    }
    close(j);
    return !sets_[j].empty();
}

void PrefixRecognizer::pop()
{
    if (sets_.size() == 1)
        throw std::logic_error("pop on empty prefix");
    sets_.pop_back();
    seen_.pop_back();
}

bool PrefixRecognizer::accepts() const
{
    for (const Entry& e : sets_.back()) {
        const Rule& r = g_->rule(e.rule);
        if (e.origin == 0 && r.lhs == g_->start() && e.dot == r.rhs.size())
            return true;
    }
    return false;
}

bool viable_prefix(const Grammar& g, const TerminalString& w)
{
    Chart chart = compute_chart(g, Lexer::identity(g), Selector(), Lexer::encode_identity(w));
    return !chart.bin(w.size()).empty();
}

bool in_language(const Grammar& g, const TerminalString& w)
{
    return compute_chart(g, Lexer::identity(g), Selector(), Lexer::encode_identity(w)).accepted();
}

// Extraction

namespace {

class Extractor {
public:
    Extractor(const Chart& chart, const Grammar& g, const ExtractCaps& caps)
        : chart_(chart), caps_(caps), prefix_(g)
    {
        for (std::size_t k = 0; k < chart.bin_count(); ++k)
            tokens_.push_back(canonical_tokens(g, chart.tokens(k)));
    }

    Extraction run()
    {
        visit(0, 0);
        return std::move(out_);
    }

private:
    void visit(std::size_t k, std::size_t empty_run)
    {
        if (stop_)
            return;
        if (++nodes_ > caps_.max_paths) {
            out_.truncated = true;
            stop_ = true;
            return;
        }
        if (k == chart_.input().size() && prefix_.accepts()) {
            out_.paths.insert(path_);
            if (out_.paths.size() >= caps_.max_results) {
                out_.truncated = true;
                stop_ = true;
                return;
            }
        }
        for (const Token& x : tokens_[k]) {
            const bool viable = prefix_.push(x.terminal);
            if (viable) {
                if (x.empty() && empty_run >= caps_.max_epsilon_iterations) {
                    out_.truncated = true;
                } else {
                    path_.push_back(x);
                    visit(k + x.size(), x.empty() ? empty_run + 1 : 0);
                    path_.pop_back();
                }
            }
            prefix_.pop();
            if (stop_)
                return;
        }
    }

    const Chart& chart_;
    ExtractCaps caps_;
    PrefixRecognizer prefix_;
    std::vector<std::vector<Token>> tokens_;
    Path path_;
    Extraction out_;
    std::size_t nodes_ = 0;
    bool stop_ = false;
};

} // namespace

Extraction extract_ll(const Chart& chart, const Grammar& g, const ExtractCaps& caps)
{
    return Extractor(chart, g, caps).run();
}

} // namespace locallex
