import classyjson as cj


def recursive_update(obj, new):  # layers nested config dicts, later values win
    if isinstance(obj, dict) and isinstance(new, dict):
        for k, v in new.items():
            obj[k] = recursive_update(obj.get(k, cj.classify({})), v)
    elif isinstance(new, list):
        return cj.classify(list(new))  # lists are replaced whole, never merged item by item
    else:
        return new

    return obj


def split_list(value):  # '1, 2,e(1)' -> ['1', '2', 'e(1)'], commas inside parentheses are kept
    if isinstance(value, (list, tuple)):
        return [str(v).strip() for v in value]

    parts, depth, cur = [], 0, ''

    for ch in str(value):
        if ch == ',' and depth == 0:
            parts.append(cur.strip())
            cur = ''
            continue

        depth += (ch == '(') - (ch == ')')
        cur += ch

    if cur.strip():
        parts.append(cur.strip())

    return parts
