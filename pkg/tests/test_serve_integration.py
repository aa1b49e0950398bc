"""Live uvicorn process checks for the serve command."""

import signal
import socket
import subprocess
import sys
import time

import httpx
import pytest

from lbdx.snapshot import save_snapshot


@pytest.fixture(scope="module")
def snapshot_dir(sample_snapshot, tmp_path_factory):
    d = tmp_path_factory.mktemp("snap")
    save_snapshot(sample_snapshot, d)
    return d


def free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


def start_server(snapshot_dir, port):
    return subprocess.Popen(
        [sys.executable, "-m", "lbdx.cli", "serve",
         "--snapshot", str(snapshot_dir), "--port", str(port)],
        stdout=subprocess.PIPE, stderr=subprocess.STDOUT, text=True)


def wait_until_up(port, timeout=15.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        try:
            return httpx.get(f"http://127.0.0.1:{port}/api/meta", timeout=2.0)
        except httpx.TransportError:
            time.sleep(0.2)
    raise TimeoutError("server did not come up")


def test_serve_answers_meta_and_exits_cleanly_on_interrupt(snapshot_dir):
    port = free_port()
    proc = start_server(snapshot_dir, port)
    try:
        response = wait_until_up(port)
        assert response.status_code == 200
        assert response.json()["config"]["k"] == 50
    finally:
        proc.send_signal(signal.SIGINT)
        code = proc.wait(timeout=15)
    assert code == 0


def test_serve_fails_when_port_busy(snapshot_dir):
    blocker = socket.socket()
    blocker.bind(("127.0.0.1", 0))
    blocker.listen(1)
    port = blocker.getsockname()[1]
    try:
        proc = start_server(snapshot_dir, port)
        code = proc.wait(timeout=30)
        out = proc.stdout.read()
        assert code != 0
        assert str(port) in out or "in use" in out.lower()
    finally:
        blocker.close()
