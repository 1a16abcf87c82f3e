#include "b2sr/terms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace b2sr {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool valid_symbol(std::string_view s) {
    if (s.empty() || !is_lower(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), is_digit);
}

}  // namespace

Letter::Letter(std::string symbol) : symbol_(std::move(symbol)) {
    if (!valid_symbol(symbol_)) {
        throw std::invalid_argument("not a letter symbol: \"" + symbol_ + '"');
    }
}

Word::Word(LetterSeq letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("a word must contain at least one letter");
    }
}

LetterSeq Word::prefix(std::size_t n) const {
    if (n > letters_.size()) {
        throw std::out_of_range("prefix length exceeds word length");
    }
    return LetterSeq(letters_.begin(), letters_.begin() + n);
}

LetterSeq Word::suffix(std::size_t i) const {
    if (i > letters_.size()) {
        throw std::out_of_range("suffix start exceeds word length");
    }
    return LetterSeq(letters_.begin() + i, letters_.end());
}

Word Word::reversed() const {
    return Word(LetterSeq(letters_.rbegin(), letters_.rend()));
}

std::string Word::str() const { return to_string(letters_); }

Polynomial::Polynomial(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.empty()) {
        throw std::invalid_argument(
            "a polynomial must contain at least one word");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

Polynomial Polynomial::single(Word w) {
    return Polynomial(std::vector<Word>{std::move(w)});
}

bool Polynomial::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

Polynomial Polynomial::united(const Polynomial& other) const {
    std::vector<Word> all = words_;
    all.insert(all.end(), other.words_.begin(), other.words_.end());
    return Polynomial(std::move(all));
}

std::set<Letter> Polynomial::content() const {
    std::set<Letter> out;
    for (const Word& w : words_) {
        out.insert(w.letters().begin(), w.letters().end());
    }
    return out;
}

Polynomial Polynomial::reversed() const {
    std::vector<Word> out;
    out.reserve(words_.size());
    for (const Word& w : words_) out.push_back(w.reversed());
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const { return print_polynomial(*this); }

namespace {

// Single pass tokenizer. Letters use maximal munch on the digit run, so
// "x12" is one letter and "x1 2" is an error at the bare digit.
class Parser {
public:
    explicit Parser(std::string_view in) : in_(in) {}

    Polynomial run() {
        std::vector<Word> words;
        words.push_back(word());
        for (;;) {
            skip_separators();
            if (pos_ == in_.size()) break;
            if (in_[pos_] != '+') {
                fail("expected '+' between summands");
            }
            ++pos_;
            words.push_back(word());
        }
        return Polynomial(std::move(words));
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    void skip_separators() {
        while (pos_ < in_.size() &&
               (std::isspace(static_cast<unsigned char>(in_[pos_])) ||
                in_[pos_] == '*')) {
            ++pos_;
        }
    }

    Word word() {
        skip_separators();
        if (pos_ == in_.size() || in_[pos_] == '+') {
            fail("expected a word");
        }
        LetterSeq letters;
        for (;;) {
            letters.push_back(letter());
            skip_separators();
            if (pos_ == in_.size() || in_[pos_] == '+') break;
        }
        return Word(std::move(letters));
    }

    Letter letter() {
        char c = in_[pos_];
        if (!is_lower(c)) {
            if (std::isupper(static_cast<unsigned char>(c))) {
                fail("letters are lowercase");
            }
            fail(std::string("unexpected character '") + c + '\'');
        }
        std::size_t start = pos_++;
        while (pos_ < in_.size() && is_digit(in_[pos_])) ++pos_;
        return Letter(std::string(in_.substr(start, pos_ - start)));
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view input) {
    return Parser(input).run();
}

LetterSeq parse_letter_seq(std::string_view input) {
    LetterSeq out;
    std::size_t pos = 0;
    while (pos < input.size()) {
        char c = input[pos];
        if (!is_lower(c)) {
            throw ParseError(std::string("unexpected character '") + c + '\'',
                             pos);
        }
        std::size_t start = pos++;
        while (pos < input.size() && is_digit(input[pos])) ++pos;
        out.push_back(Letter(std::string(input.substr(start, pos - start))));
    }
    return out;
}

std::string print_polynomial(const Polynomial& p) {
    std::ostringstream out;
    bool first = true;
    for (const Word& w : p.words()) {
        if (!first) out << " + ";
        first = false;
        out << w.str();
    }
    return out.str();
}

std::string to_string(const LetterSeq& seq) {
    std::string out;
    for (const Letter& l : seq) out += l.symbol();
    return out;
}

std::set<Letter> content(const Word& w) {
    return std::set<Letter>(w.letters().begin(), w.letters().end());
}

std::pair<LetterSeq, LetterSeq> find_factor(const Word& w, const Letter& a,
                                            const Letter& b) {
    const LetterSeq& ls = w.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        if (ls[i] == a && ls[i + 1] == b) {
            return {LetterSeq(ls.begin(), ls.begin() + i),
                    LetterSeq(ls.begin() + i + 2, ls.end())};
        }
    }
    throw std::invalid_argument("word " + w.str() + " has no factor " +
                                a.symbol() + b.symbol());
}

}  // namespace b2sr
