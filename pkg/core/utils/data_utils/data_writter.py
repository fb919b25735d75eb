import os
import sys
import json
from typing import Any, Dict, Optional

import pandas as pd


def dump_json(json_data: Any) -> str:
    return json.dumps(json_data, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def write_json(file_path, json_data):
    with open(os.path.join(file_path), 'w', encoding='utf-8') as fo:
        fo.write(dump_json(json_data))


def frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator='\n')


def frames_to_csv(frames: Dict[str, pd.DataFrame]) -> str:
    """
    Several tables in one CSV stream, each preceded by a ``# <title>`` line and separated by a blank line.
    """
    sections = []
    for title, frame in frames.items():
        sections.append('# {}\n{}'.format(title, frame_to_csv(frame)))
    return '\n'.join(sections)


def write_text(text: str, file_path: Optional[str] = None) -> None:
    if file_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    dirname = os.path.dirname(os.path.abspath(file_path))
    if not os.path.exists(dirname):
        os.makedirs(dirname)
    with open(file_path, 'w', encoding='utf-8') as fo:
        fo.write(text)


def frame_records(frame: pd.DataFrame) -> list:
    return json.loads(frame.to_json(orient='records', force_ascii=False))
