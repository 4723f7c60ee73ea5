from dihom import catho, dot, gridscene, precubical


def test_complex_dot_is_deterministic_and_quoted():
    k = gridscene.to_precubical(gridscene.make_scene(1, 1, [], (0, 0), (1, 1)))
    first = dot.complex_dot(k, highlight_edges=("e0_0",))
    second = dot.complex_dot(k, highlight_edges=("e0_0",))
    assert first == second
    assert first.startswith('digraph "complex" {')
    assert '"v0_0" -> "v1_0" [label="e0_0", color=red, penwidth=2.0];' in first
    assert first.endswith("}\n")


def test_complex_dot_uses_labels():
    k = gridscene.to_precubical(gridscene.make_scene(1, 1, [], (0, 0), (1, 1)))
    assert 'label="(0,0)"' in dot.complex_dot(k)


def test_category_dot_lists_objects_and_arrows():
    text = dot.category_dot(catho.ordinal(3))
    assert text.count("->") == 3  # a(0,1), a(0,2), a(1,2); identities omitted
    assert '"0" -> "2" [label="a(0,2)"];' in text


def test_dot_quotes_special_characters():
    k = precubical.PreCubicalSet(['a"b'], {}, {})
    assert '"a\\"b"' in dot.complex_dot(k)
