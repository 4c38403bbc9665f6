"""HTTP facade: the wizard as a session-based REST API under /api/v1.

Sessions live in a single JSON snapshot file written atomically
(temp-then-rename) on every mutation, so answers survive a process restart.
Recommendations are never stored: every GET recomputes them through the pure
engine, which keeps the service a thin delegation layer.
"""

from __future__ import annotations

import json
import os
import secrets
import tempfile
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import engine, render
from .builtin import builtin_kb
from .model import KnowledgeBase


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class Session:
    id: str
    kb_id: str
    kb_version: str
    answers: dict[str, str] = field(default_factory=dict)
    created_at: str = ""
    updated_at: str = ""
    status: str = "in_progress"

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "kb_id": self.kb_id,
            "kb_version": self.kb_version,
            "answers": dict(self.answers),
            "created_at": self.created_at,
            "updated_at": self.updated_at,
            "status": self.status,
        }

    @staticmethod
    def from_dict(doc: dict[str, Any]) -> "Session":
        return Session(
            id=doc["id"],
            kb_id=doc["kb_id"],
            kb_version=doc["kb_version"],
            answers=dict(doc["answers"]),
            created_at=doc["created_at"],
            updated_at=doc["updated_at"],
            status=doc["status"],
        )


class SessionStore:
    """Write-through session map; optional single-file persistence."""

    def __init__(self, path: Path | None = None):
        self._path = Path(path) if path else None
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        if self._path and self._path.exists():
            doc = json.loads(self._path.read_text(encoding="utf-8"))
            self._sessions = {
                sid: Session.from_dict(s) for sid, s in doc["sessions"].items()
            }

    def _flush_locked(self) -> None:
        if self._path is None:
            return
        doc = {
            "sessions": {
                sid: self._sessions[sid].to_dict()
                for sid in sorted(self._sessions)
            }
        }
        self._path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(
            dir=str(self._path.parent), prefix=self._path.name, suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=2, ensure_ascii=False)
                fh.write("\n")
            os.replace(tmp, self._path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def create(self, kb: KnowledgeBase) -> Session:
        with self._lock:
            sid = secrets.token_hex(16)
            while sid in self._sessions:
                sid = secrets.token_hex(16)
            now = _now()
            session = Session(
                id=sid,
                kb_id=kb.id,
                kb_version=kb.version,
                created_at=now,
                updated_at=now,
            )
            self._sessions[sid] = session
            self._flush_locked()
            return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            return self._sessions.get(session_id)

    def put_answer(
        self, session_id: str, kb: KnowledgeBase, question_id: str, option_id: str
    ) -> Session:
        """Record one answer; raises the engine's errors on bad ids."""
        with self._lock:
            session = self._sessions[session_id]
            answers = engine.validate_answers(kb, session.answers)
            answers = engine.record_answer(answers, kb, question_id, option_id)
            session.answers = dict(answers.entries)
            session.updated_at = _now()
            session.status = (
                "completed"
                if len(session.answers) == len(kb.questions)
                else "in_progress"
            )
            self._flush_locked()
            return session


class AnswerBody(BaseModel):
    option_id: str


_REPORT_MEDIA_TYPES = {
    "md": "text/markdown; charset=utf-8",
    "html": "text/html; charset=utf-8",
    "dot": "text/vnd.graphviz; charset=utf-8",
}


def create_app(
    kb: KnowledgeBase | None = None,
    store_path: Path | str | None = None,
    ui_dir: Path | str | None = None,
) -> FastAPI:
    kb = kb or builtin_kb()
    store = SessionStore(Path(store_path) if store_path else None)
    app = FastAPI(title="archrec", version="1.0")

    def _session_or_404(session_id: str) -> Session:
        session = store.get(session_id)
        if session is None:
            raise HTTPException(404, detail=f"unknown session {session_id!r}")
        return session

    @app.get("/api/v1/questions")
    def list_questions() -> dict[str, Any]:
        # The contribution table stays server-side: clients only see the
        # questions and their answer options.
        return {
            "kb_id": kb.id,
            "kb_version": kb.version,
            "questions": [
                {
                    "id": q.id,
                    "text": q.text,
                    "concern": q.concern,
                    "options": [
                        {"id": o.id, "label": o.label} for o in q.options
                    ],
                }
                for q in kb.questions
            ],
        }

    @app.post("/api/v1/sessions", status_code=201)
    def create_session() -> dict[str, Any]:
        return store.create(kb).to_dict()

    @app.get("/api/v1/sessions/{session_id}")
    def get_session(session_id: str) -> dict[str, Any]:
        return _session_or_404(session_id).to_dict()

    @app.put("/api/v1/sessions/{session_id}/answers/{question_id}")
    def put_answer(
        session_id: str, question_id: str, body: AnswerBody
    ) -> dict[str, Any]:
        _session_or_404(session_id)
        try:
            session = store.put_answer(
                session_id, kb, question_id, body.option_id
            )
        except engine.UnknownQuestion as exc:
            raise HTTPException(422, detail=str(exc)) from exc
        except engine.UnknownOption as exc:
            raise HTTPException(422, detail=str(exc)) from exc
        return session.to_dict()

    @app.get("/api/v1/sessions/{session_id}/recommendations")
    def get_recommendations(session_id: str) -> dict[str, Any]:
        session = _session_or_404(session_id)
        answers = engine.validate_answers(kb, session.answers)
        return engine.recommend(kb, answers).to_dict(kb)

    @app.get("/api/v1/sessions/{session_id}/report")
    def get_report(session_id: str, format: str = "md") -> Response:
        session = _session_or_404(session_id)
        if format not in _REPORT_MEDIA_TYPES:
            raise HTTPException(400, detail=f"unknown format {format!r}")
        answers = engine.validate_answers(kb, session.answers)
        report = engine.recommend(kb, answers)
        opts = render.RenderOptions(timestamp=session.updated_at)
        if format == "md":
            body = render.render_markdown(report, kb, opts)
        elif format == "html":
            body = render.render_html(report, kb, opts)
        else:
            body = render.render_dot(report, kb)
        return Response(content=body, media_type=_REPORT_MEDIA_TYPES[format])

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
