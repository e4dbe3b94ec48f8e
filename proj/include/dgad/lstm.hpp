#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dgad/corpus.hpp"
#include "dgad/label.hpp"

namespace dgad {

/// Fixed character vocabulary: PAD=0, OOV=1, 'a'..'z'=2..27,
/// '0'..'9'=28..37, '-'=38. max_len is the DNS label limit.
struct Tokenizer {
    static constexpr int pad_id = 0;
    static constexpr int oov_id = 1;
    static constexpr int alphabet_size = 39;
    static constexpr int max_len = 63;

    int id_of(char c) const {
        if (c >= 'a' && c <= 'z') return 2 + (c - 'a');
        if (c >= '0' && c <= '9') return 28 + (c - '0');
        if (c == '-') return 38;
        return oov_id;
    }
};

/// Fixed-length id buffer; PAD fills a contiguous left prefix and the
/// content sits right-aligned in the last true_len slots.
struct TokenSequence {
    std::array<std::uint8_t, Tokenizer::max_len> ids{};
    int true_len = 0;
};

/// Maps characters to ids, truncating to the first max_len characters and
/// left-padding shorter inputs.
TokenSequence tokenize(std::string_view root, const Tokenizer& tok = {});

/// Character embedding + single LSTM layer + dense sigmoid head, all
/// 64-bit floats. Matrices are row-major: W_* is [d_emb][d_hid],
/// U_* is [d_hid][d_hid]; preactivation j is b[j] + x·W[:,j] + h·U[:,j].
struct LstmModel {
    int d_emb = 16;
    int d_hid = 64;
    std::vector<double> emb;                // alphabet_size x d_emb
    std::vector<double> w_i, w_f, w_g, w_o; // d_emb x d_hid
    std::vector<double> u_i, u_f, u_g, u_o; // d_hid x d_hid
    std::vector<double> b_i, b_f, b_g, b_o; // d_hid
    std::vector<double> head_w;             // d_hid
    double head_b = 0.0;
};

/// Zero-initialized model of the given dimensions.
LstmModel make_lstm(int d_emb, int d_hid);

/// Activations recorded by forward for exact backpropagation.
struct ForwardCache {
    int steps = 0;
    std::vector<double> gate_i, gate_f, gate_g, gate_o; // steps x d_hid
    std::vector<double> cell, cell_tanh, hidden;        // steps x d_hid
    double p = 0.0;
};

/// Runs the recurrence over the non-PAD steps (h0 = c0 = 0) and returns
/// the sigmoid head probability. PAD steps are skipped entirely.
double forward(const LstmModel& model, const TokenSequence& seq, ForwardCache& cache);

/// Binary cross-entropy with p clamped to [1e-12, 1 - 1e-12].
double loss_bce(double p, int y);

/// Accumulates exact gradients of loss_bce(forward(seq), y) into `grads`
/// (same shape as the model; zero it first for a fresh gradient).
void backward(const LstmModel& model, const TokenSequence& seq, int y,
              const ForwardCache& cache, LstmModel& grads);

enum class Optimizer { sgd, adam };

struct TrainConfig {
    double learning_rate = 1e-3;
    std::size_t batch_size = 128;
    std::size_t epochs = 10;
    std::uint64_t seed = 0;
    Optimizer optimizer = Optimizer::adam;
    double clip_norm = 5.0;
    int d_emb = 16;
    int d_hid = 64;
};

struct EpochStats {
    double train_loss = 0.0;
    double val_accuracy = 0.0;
};

struct TrainResult {
    LstmModel model;
    std::vector<EpochStats> history;
};

/// Deterministic training: parameters initialized uniformly in
/// [-0.08, 0.08] from the seed, one seeded shuffle per epoch, batch-mean
/// gradients clipped by global norm, SGD or Adam (b1=0.9, b2=0.999,
/// eps=1e-8) updates.
TrainResult train_lstm(const DatasetSplit& split, const TrainConfig& config,
                       const Tokenizer& tok = {});

struct Prediction {
    double score = 0.0;
    Label label = Label::legit;
};

/// Parses the domain, tokenizes its root and runs forward; DGA iff
/// score > 0.5.
Prediction predict(const LstmModel& model, const Tokenizer& tok, const SuffixTable& table,
                   std::string_view domain);

} // namespace dgad
