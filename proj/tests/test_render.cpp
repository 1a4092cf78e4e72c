#include "doctest.h"

#include "lfd/render.hpp"
#include "lfd/ribbon.hpp"

#include "corpus.hpp"

using namespace lfd;

namespace {

int count_sub(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) n++;
    return n;
}

}  // namespace

TEST_CASE("svg front structure") {
    auto d = corpus::minimal_theta();
    std::string svg = render(d, RenderFormat::svg);
    CHECK(svg.substr(0, 5) == "<?xml");
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_sub(svg, "<circle class=\"vertex\"") == 2);
    CHECK(count_sub(svg, "<path class=\"edge\"") == 3);
    CHECK(count_sub(svg, "<g class=\"crossing\">") == 0);

    auto t = corpus::twisted_theta();
    std::string svg2 = render(t, RenderFormat::svg);
    CHECK(count_sub(svg2, "<g class=\"crossing\">") == 1);
}

TEST_CASE("svg link structure") {
    auto po = push_off(corpus::minimal_theta());
    std::string svg = render(po.link, RenderFormat::svg);
    CHECK(count_sub(svg, "<g class=\"crossing\">") == po.link.crossing_count());
    CHECK(count_sub(svg, "<path class=\"component\"") == (int)po.components.size());
}

TEST_CASE("render is deterministic") {
    for (auto& d : corpus::theta_seeds()) {
        CHECK(render(d, RenderFormat::svg) == render(d, RenderFormat::svg));
        CHECK(render(d, RenderFormat::ascii) == render(d, RenderFormat::ascii));
        auto po = push_off(d);
        CHECK(render(po.link, RenderFormat::svg) == render(po.link, RenderFormat::svg));
    }
}

TEST_CASE("ascii front glyphs") {
    auto d = corpus::minimal_theta();
    std::string art = render(d, RenderFormat::ascii);
    CHECK(count_sub(art, "*") == 2);
    CHECK(art.find('-') != std::string::npos);

    auto t = corpus::twisted_theta();
    std::string art2 = render(t, RenderFormat::ascii);
    // one crossing: both diagonals plus the over-strand center mark
    CHECK(count_sub(art2, "\\") >= 3);
    CHECK(count_sub(art2, "/") >= 2);
}

TEST_CASE("svg renders every seed without throwing") {
    for (auto& d : corpus::theta_seeds()) {
        std::string svg = render(d, RenderFormat::svg);
        CHECK(svg.find("</svg>") != std::string::npos);
        CHECK(count_sub(svg, "<circle class=\"vertex\"") == 2);
    }
}
