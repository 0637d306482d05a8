#include "dgw/fixtures.hpp"

namespace dgw::fixtures {

QP triangles(int order) {
    auto q = std::make_shared<GradedQuiver>();
    for (const char* p : {"a", "b", "c"})
        for (int i = 1; i <= 4; ++i) q->add_vertex(p + std::to_string(i));
    for (int i = 1; i <= 4; ++i) {
        auto s = std::to_string(i);
        q->add_arrow("alpha" + s, "b" + s, "c" + s);
        q->add_arrow("beta" + s, "c" + s, "a" + s);
        q->add_arrow("gamma" + s, "a" + s, "b" + s);
    }
    for (int i = 1; i <= 4; ++i)
        q->add_arrow("delta" + std::to_string(i), "a" + std::to_string(i),
                     "a" + std::to_string(i % 4 + 1));
    QP qp = make_qp(q, order);
    qp.potential.add_named_word({"delta4", "delta3", "delta2", "delta1"}, Scalar(1));
    for (int i = 1; i <= 4; ++i) {
        auto s = std::to_string(i);
        qp.potential.add_named_word({"gamma" + s, "beta" + s, "alpha" + s}, Scalar(1));
    }
    return qp;
}

QP hexagon(int order) {
    auto q = std::make_shared<GradedQuiver>();
    for (int k = 1; k <= 6; ++k) q->add_vertex(std::to_string(k));
    for (int k = 1; k <= 6; ++k)
        q->add_arrow("a" + std::to_string(k), std::to_string(k), std::to_string(k % 6 + 1));
    QP qp = make_qp(q, order);
    qp.potential.add_named_word({"a5", "a4", "a3", "a2", "a1", "a6"}, Scalar(1));
    return qp;
}

QP line(int order) {
    auto q = std::make_shared<GradedQuiver>();
    q->add_vertex("1");
    q->add_vertex("2");
    q->add_arrow("a", "1", "2");
    return make_qp(q, order);
}

}  // namespace dgw::fixtures
