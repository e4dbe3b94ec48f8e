#include "dgad/lstm.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "dgad/error.hpp"
#include "dgad/features.hpp"
#include "dgad/prng.hpp"

namespace dgad {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

/// All parameter arrays of a model, in one fixed order.
std::vector<std::span<double>> param_spans(LstmModel& m) {
    return {m.emb, m.w_i, m.w_f, m.w_g, m.w_o, m.u_i, m.u_f,       m.u_g,
            m.u_o, m.b_i, m.b_f, m.b_g, m.b_o, m.head_w, {&m.head_b, 1}};
}

} // namespace

TokenSequence tokenize(std::string_view root, const Tokenizer& tok) {
    if (root.empty()) fail(errc::empty_input, "tokenize of empty root");

    TokenSequence seq;
    const auto keep = std::min<std::size_t>(root.size(), Tokenizer::max_len);
    seq.true_len = static_cast<int>(keep);
    const std::size_t offset = Tokenizer::max_len - keep;
    for (std::size_t i = 0; i < keep; ++i)
        seq.ids[offset + i] = static_cast<std::uint8_t>(tok.id_of(root[i]));
    return seq;
}

LstmModel make_lstm(int d_emb, int d_hid) {
    LstmModel m;
    m.d_emb = d_emb;
    m.d_hid = d_hid;
    m.emb.assign(static_cast<std::size_t>(Tokenizer::alphabet_size) * d_emb, 0.0);
    for (auto* w : {&m.w_i, &m.w_f, &m.w_g, &m.w_o})
        w->assign(static_cast<std::size_t>(d_emb) * d_hid, 0.0);
    for (auto* u : {&m.u_i, &m.u_f, &m.u_g, &m.u_o})
        u->assign(static_cast<std::size_t>(d_hid) * d_hid, 0.0);
    for (auto* b : {&m.b_i, &m.b_f, &m.b_g, &m.b_o}) b->assign(d_hid, 0.0);
    m.head_w.assign(d_hid, 0.0);
    m.head_b = 0.0;
    return m;
}

double forward(const LstmModel& model, const TokenSequence& seq, ForwardCache& cache) {
    const int H = model.d_hid;
    const int E = model.d_emb;
    const int T = seq.true_len;

    cache.steps = T;
    cache.tokens.assign(T, 0);
    const std::size_t area = static_cast<std::size_t>(T) * H;
    for (auto* v : {&cache.gate_i, &cache.gate_f, &cache.gate_g, &cache.gate_o, &cache.cell,
                    &cache.cell_tanh, &cache.hidden})
        v->assign(area, 0.0);

    std::vector<double> pre(static_cast<std::size_t>(4) * H);
    const std::vector<double> zeros(H, 0.0);

    for (int t = 0; t < T; ++t) {
        const int token = seq.ids[Tokenizer::max_len - T + t];
        cache.tokens[t] = token;
        const double* x = &model.emb[static_cast<std::size_t>(token) * E];
        const double* h_prev = t == 0 ? zeros.data() : &cache.hidden[(t - 1) * static_cast<std::size_t>(H)];
        const double* c_prev = t == 0 ? zeros.data() : &cache.cell[(t - 1) * static_cast<std::size_t>(H)];

        double* pi = pre.data();
        double* pf = pi + H;
        double* pg = pf + H;
        double* po = pg + H;
        std::copy(model.b_i.begin(), model.b_i.end(), pi);
        std::copy(model.b_f.begin(), model.b_f.end(), pf);
        std::copy(model.b_g.begin(), model.b_g.end(), pg);
        std::copy(model.b_o.begin(), model.b_o.end(), po);

        for (int k = 0; k < E; ++k) {
            const double xk = x[k];
            const std::size_t row = static_cast<std::size_t>(k) * H;
            for (int j = 0; j < H; ++j) {
                pi[j] += xk * model.w_i[row + j];
                pf[j] += xk * model.w_f[row + j];
                pg[j] += xk * model.w_g[row + j];
                po[j] += xk * model.w_o[row + j];
            }
        }
        for (int k = 0; k < H; ++k) {
            const double hk = h_prev[k];
            if (hk == 0.0) continue;
            const std::size_t row = static_cast<std::size_t>(k) * H;
            for (int j = 0; j < H; ++j) {
                pi[j] += hk * model.u_i[row + j];
                pf[j] += hk * model.u_f[row + j];
                pg[j] += hk * model.u_g[row + j];
                po[j] += hk * model.u_o[row + j];
            }
        }

        double* gi = &cache.gate_i[t * static_cast<std::size_t>(H)];
        double* gf = &cache.gate_f[t * static_cast<std::size_t>(H)];
        double* gg = &cache.gate_g[t * static_cast<std::size_t>(H)];
        double* go = &cache.gate_o[t * static_cast<std::size_t>(H)];
        double* c = &cache.cell[t * static_cast<std::size_t>(H)];
        double* tc = &cache.cell_tanh[t * static_cast<std::size_t>(H)];
        double* h = &cache.hidden[t * static_cast<std::size_t>(H)];
        for (int j = 0; j < H; ++j) {
            gi[j] = sigmoid(pi[j]);
            gf[j] = sigmoid(pf[j]);
            gg[j] = std::tanh(pg[j]);
            go[j] = sigmoid(po[j]);
            c[j] = gf[j] * c_prev[j] + gi[j] * gg[j];
            tc[j] = std::tanh(c[j]);
            h[j] = go[j] * tc[j];
        }
    }

    double z = model.head_b;
    const double* h_last = &cache.hidden[(T - 1) * static_cast<std::size_t>(H)];
    for (int j = 0; j < H; ++j) z += model.head_w[j] * h_last[j];
    cache.p = sigmoid(z);
    return cache.p;
}

double loss_bce(double p, int y) {
    const double eps = 1e-12;
    const double pc = std::clamp(p, eps, 1.0 - eps);
    return y == 1 ? -std::log(pc) : -std::log(1.0 - pc);
}

void backward(const LstmModel& model, const TokenSequence& seq, int y,
              const ForwardCache& cache, LstmModel& grads) {
    const int H = model.d_hid;
    const int E = model.d_emb;
    const int T = cache.steps;
    (void)seq;

    const double dz = cache.p - static_cast<double>(y);
    grads.head_b += dz;
    const double* h_last = &cache.hidden[(T - 1) * static_cast<std::size_t>(H)];

    std::vector<double> dh(H), dc(H, 0.0);
    for (int j = 0; j < H; ++j) {
        grads.head_w[j] += dz * h_last[j];
        dh[j] = dz * model.head_w[j];
    }

    std::vector<double> da_i(H), da_f(H), da_g(H), da_o(H), dh_prev(H);
    const std::vector<double> zeros(H, 0.0);

    for (int t = T - 1; t >= 0; --t) {
        const std::size_t off = t * static_cast<std::size_t>(H);
        const double* gi = &cache.gate_i[off];
        const double* gf = &cache.gate_f[off];
        const double* gg = &cache.gate_g[off];
        const double* go = &cache.gate_o[off];
        const double* tc = &cache.cell_tanh[off];
        const double* c_prev = t == 0 ? zeros.data() : &cache.cell[off - H];
        const double* h_prev = t == 0 ? zeros.data() : &cache.hidden[off - H];

        for (int j = 0; j < H; ++j) {
            da_o[j] = dh[j] * tc[j] * go[j] * (1.0 - go[j]);
            dc[j] += dh[j] * go[j] * (1.0 - tc[j] * tc[j]);
            da_i[j] = dc[j] * gg[j] * gi[j] * (1.0 - gi[j]);
            da_f[j] = dc[j] * c_prev[j] * gf[j] * (1.0 - gf[j]);
            da_g[j] = dc[j] * gi[j] * (1.0 - gg[j] * gg[j]);
            grads.b_i[j] += da_i[j];
            grads.b_f[j] += da_f[j];
            grads.b_g[j] += da_g[j];
            grads.b_o[j] += da_o[j];
        }

        const int token = cache.tokens[t];
        const double* x = &model.emb[static_cast<std::size_t>(token) * E];
        double* dx = &grads.emb[static_cast<std::size_t>(token) * E];
        for (int k = 0; k < E; ++k) {
            const double xk = x[k];
            const std::size_t row = static_cast<std::size_t>(k) * H;
            double acc = 0.0;
            for (int j = 0; j < H; ++j) {
                grads.w_i[row + j] += xk * da_i[j];
                grads.w_f[row + j] += xk * da_f[j];
                grads.w_g[row + j] += xk * da_g[j];
                grads.w_o[row + j] += xk * da_o[j];
                acc += model.w_i[row + j] * da_i[j] + model.w_f[row + j] * da_f[j] +
                       model.w_g[row + j] * da_g[j] + model.w_o[row + j] * da_o[j];
            }
            dx[k] += acc;
        }

        for (int k = 0; k < H; ++k) {
            const double hk = h_prev[k];
            const std::size_t row = static_cast<std::size_t>(k) * H;
            double acc = 0.0;
            for (int j = 0; j < H; ++j) {
                grads.u_i[row + j] += hk * da_i[j];
                grads.u_f[row + j] += hk * da_f[j];
                grads.u_g[row + j] += hk * da_g[j];
                grads.u_o[row + j] += hk * da_o[j];
                acc += model.u_i[row + j] * da_i[j] + model.u_f[row + j] * da_f[j] +
                       model.u_g[row + j] * da_g[j] + model.u_o[row + j] * da_o[j];
            }
            dh_prev[k] = acc;
        }

        dh = dh_prev;
        for (int j = 0; j < H; ++j) dc[j] *= gf[j];
    }
}

namespace {

void zero_params(LstmModel& m) {
    for (auto span : param_spans(m)) std::fill(span.begin(), span.end(), 0.0);
}

void scale_params(LstmModel& m, double factor) {
    for (auto span : param_spans(m))
        for (double& v : span) v *= factor;
}

double global_norm(LstmModel& m) {
    double sq = 0.0;
    for (auto span : param_spans(m))
        for (double v : span) sq += v * v;
    return std::sqrt(sq);
}

struct AdamState {
    LstmModel m, v;
    std::uint64_t t = 0;
};

void apply_update(LstmModel& model, LstmModel& grads, const TrainConfig& config,
                  AdamState& adam) {
    if (config.optimizer == Optimizer::sgd) {
        auto ps = param_spans(model);
        auto gs = param_spans(grads);
        for (std::size_t s = 0; s < ps.size(); ++s)
            for (std::size_t k = 0; k < ps[s].size(); ++k)
                ps[s][k] -= config.learning_rate * gs[s][k];
        return;
    }

    constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
    ++adam.t;
    const double corr1 = 1.0 - std::pow(b1, static_cast<double>(adam.t));
    const double corr2 = 1.0 - std::pow(b2, static_cast<double>(adam.t));
    auto ps = param_spans(model);
    auto gs = param_spans(grads);
    auto ms = param_spans(adam.m);
    auto vs = param_spans(adam.v);
    for (std::size_t s = 0; s < ps.size(); ++s) {
        for (std::size_t k = 0; k < ps[s].size(); ++k) {
            const double g = gs[s][k];
            ms[s][k] = b1 * ms[s][k] + (1.0 - b1) * g;
            vs[s][k] = b2 * vs[s][k] + (1.0 - b2) * g * g;
            const double mhat = ms[s][k] / corr1;
            const double vhat = vs[s][k] / corr2;
            ps[s][k] -= config.learning_rate * mhat / (std::sqrt(vhat) + eps);
        }
    }
}

} // namespace

TrainResult train_lstm(const DatasetSplit& split, const TrainConfig& config,
                       const Tokenizer& tok) {
    if (split.train.empty()) fail(errc::empty_input, "empty training split");
    bool has0 = false, has1 = false;
    for (const auto& r : split.train) (r.label == Label::legit ? has0 : has1) = true;
    if (!has0 || !has1) fail(errc::single_class_input, "training split needs both classes");

    std::vector<TokenSequence> train_seq, val_seq;
    std::vector<int> train_y, val_y;
    train_seq.reserve(split.train.size());
    for (const auto& r : split.train) {
        train_seq.push_back(tokenize(r.parsed.root, tok));
        train_y.push_back(label_index(r.label));
    }
    val_seq.reserve(split.validation.size());
    for (const auto& r : split.validation) {
        val_seq.push_back(tokenize(r.parsed.root, tok));
        val_y.push_back(label_index(r.label));
    }

    TrainResult result;
    result.model = make_lstm(config.d_emb, config.d_hid);

    Prng rng(config.seed);
    for (auto span : param_spans(result.model))
        for (double& v : span) v = -0.08 + 0.16 * rng.next_unit();

    LstmModel grads = make_lstm(config.d_emb, config.d_hid);
    AdamState adam{make_lstm(config.d_emb, config.d_hid), make_lstm(config.d_emb, config.d_hid),
                   0};
    ForwardCache cache;

    std::vector<std::size_t> order(train_seq.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.next_below(i)]);

        double epoch_loss = 0.0;
        for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
            const std::size_t end = std::min(start + config.batch_size, order.size());
            zero_params(grads);
            for (std::size_t k = start; k < end; ++k) {
                const std::size_t i = order[k];
                const double p = forward(result.model, train_seq[i], cache);
                epoch_loss += loss_bce(p, train_y[i]);
                backward(result.model, train_seq[i], train_y[i], cache, grads);
            }
            scale_params(grads, 1.0 / static_cast<double>(end - start));
            if (config.clip_norm > 0.0) {
                const double norm = global_norm(grads);
                if (norm > config.clip_norm) scale_params(grads, config.clip_norm / norm);
            }
            apply_update(result.model, grads, config, adam);
        }

        EpochStats stats;
        stats.train_loss = epoch_loss / static_cast<double>(train_seq.size());
        if (!val_seq.empty()) {
            std::size_t correct = 0;
            for (std::size_t i = 0; i < val_seq.size(); ++i) {
                const double p = forward(result.model, val_seq[i], cache);
                const int pred = p > 0.5 ? 1 : 0;
                if (pred == val_y[i]) ++correct;
            }
            stats.val_accuracy = static_cast<double>(correct) / static_cast<double>(val_seq.size());
        }
        result.history.push_back(stats);
    }
    return result;
}

Prediction predict(const LstmModel& model, const Tokenizer& tok, const SuffixTable& table,
                   std::string_view domain) {
    const ParsedDomain parsed = parse_domain(domain, table);
    ForwardCache cache;
    const double p = forward(model, tokenize(parsed.root, tok), cache);
    return Prediction{p, p > 0.5 ? Label::dga : Label::legit};
}

} // namespace dgad
